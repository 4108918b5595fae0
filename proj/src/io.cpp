// Copyright 2026 The vcdef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcdef/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "vcdef/errors.hpp"

namespace vcdef {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw InputError("failed to write " + path);
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what());
  }
}

json measure_to_json(const MixedStrategy& mu) {
  json out = json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    out.push_back(to_string(mu.weight(i)));
  }
  return out;
}

}  // namespace

SetSystem system_from_text(std::istream& in) {
  std::size_t rows = 0;
  std::size_t columns = 0;
  if (!(in >> rows >> columns)) {
    throw InputError("system text must start with a 'rows columns' header");
  }
  std::vector<Bits> data;
  data.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string line;
    if (!(in >> line)) {
      throw InputError("system text ends before row " + std::to_string(i));
    }
    Bits bits = bits_from_string(line);
    if (bits.size() != columns) {
      throw InputError("row " + std::to_string(i) + " has " +
                       std::to_string(bits.size()) + " bits, expected " +
                       std::to_string(columns));
    }
    data.push_back(std::move(bits));
  }
  return SetSystem::from_rows(columns, std::move(data));
}

void system_to_text(const SetSystem& s, std::ostream& out) {
  out << s.num_rows() << ' ' << s.num_columns() << '\n';
  for (const Bits& row : s.rows()) out << bits_to_string(row) << '\n';
}

SetSystem system_from_json(const json& j) {
  try {
    std::vector<std::string> columns =
        j.at("columns").get<std::vector<std::string>>();
    std::vector<Bits> rows;
    for (const auto& entry : j.at("rows")) {
      rows.push_back(bits_from_string(entry.get<std::string>()));
    }
    return SetSystem(std::move(columns), std::move(rows));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed system JSON: ") + e.what());
  }
}

json system_to_json(const SetSystem& s) {
  json rows = json::array();
  for (const Bits& row : s.rows()) rows.push_back(bits_to_string(row));
  return json{{"columns", s.columns()}, {"rows", std::move(rows)}};
}

SetSystem load_system(const std::string& path) {
  std::string content = read_file(path);
  std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw InputError(path + " is empty");
  }
  if (content[first] == '{') {
    return system_from_json(parse_json(content, path));
  }
  std::istringstream in(content);
  return system_from_text(in);
}

void save_system(const SetSystem& s, const std::string& path, bool as_json) {
  std::ostringstream out;
  if (as_json) {
    out << system_to_json(s).dump(2) << '\n';
  } else {
    system_to_text(s, out);
  }
  write_file(path, out.str());
}

json certificate_to_json(const Certificate& cert) {
  json members = json::array();
  json traces = json::array();
  for (const CertificateMember& member : cert.members()) {
    json tuple = json::array();
    for (const SignedPair& pair : member.tuple.pairs()) {
      tuple.push_back(json::array({pair.column, pair.sign}));
    }
    members.push_back(std::move(tuple));
    traces.push_back(bits_to_string(member.trace));
  }
  return json{{"members", std::move(members)},
              {"m", cert.m()},
              {"k_max", cert.k_max()},
              {"traces", std::move(traces)}};
}

Certificate certificate_from_json(const json& j) {
  try {
    const json& members = j.at("members");
    const json& traces = j.at("traces");
    if (members.size() != traces.size()) {
      throw InputError("certificate members and traces differ in length");
    }
    std::vector<CertificateMember> out;
    out.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::vector<SignedPair> pairs;
      for (const auto& entry : members[i]) {
        pairs.push_back({entry.at(0).get<std::size_t>(),
                         entry.at(1).get<int>()});
      }
      out.push_back({SignedTuple::of(std::move(pairs)),
                     bits_from_string(traces[i].get<std::string>())});
    }
    Certificate cert(std::move(out));
    if (j.at("m").get<std::size_t>() != cert.m() ||
        j.at("k_max").get<std::size_t>() != cert.k_max()) {
      throw InputError("certificate m or k_max disagrees with its members");
    }
    return cert;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate JSON: ") + e.what());
  }
}

Certificate load_certificate(const std::string& path) {
  return certificate_from_json(parse_json(read_file(path), path));
}

void save_certificate(const Certificate& cert, const std::string& path) {
  write_file(path, certificate_to_json(cert).dump(2) + "\n");
}

json teaching_to_json(const SetSystem& s, const TeachingSet& t) {
  return json{{"concept", t.concept_row},
              {"trace", bits_to_string(s.row(t.concept_row))},
              {"points", t.points.indices()}};
}

json isolation_to_json(const ConstraintIsolation& iso) {
  return json{{"p0", bits_to_string(iso.p0.bits)},
              {"realizer", iso.p0.realizer},
              {"A0", iso.a0.indices()},
              {"budget", iso.budget},
              {"family_vc", iso.family_vc}};
}

json game_to_json(const GameSolution& sol) {
  return json{{"value", to_string(sol.value)},
              {"exact", sol.exact},
              {"gap", to_string(sol.gap)},
              {"nu", measure_to_json(sol.nu)},
              {"mu", measure_to_json(sol.mu)}};
}

json committee_to_json(const Committee& c) {
  json members = json::array();
  for (const auto& [position, count] : c.members) {
    members.push_back(json::array({position, count}));
  }
  return json{{"members", std::move(members)}, {"m", c.m}};
}

json template_to_json(const UniformTemplate& shape) {
  return json{{"J_slots", shape.j_slots},
              {"k_slots", shape.k_slots},
              {"K", shape.parameter_length}};
}

}  // namespace vcdef
