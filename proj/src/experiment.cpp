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

#include "vcdef/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "vcdef/errors.hpp"
#include "vcdef/skolem.hpp"
#include "vcdef/teaching.hpp"
#include "vcdef/uniform_template.hpp"

namespace vcdef {
namespace {

template <typename Fn>
void run_check(std::vector<CheckLine>& checks, const std::string& name,
               Fn&& fn) {
  CheckLine line;
  line.name = name;
  try {
    fn(line);
  } catch (const std::exception& e) {
    line.passed = false;
    line.detail = e.what();
  }
  checks.push_back(std::move(line));
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool row_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
      row_started = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      row_started = true;
    } else if (c == '\n') {
      if (row_started || !field.empty()) {
        fields.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(fields));
        fields.clear();
      }
      row_started = false;
    } else if (c == '\r') {
      // tolerated before a newline
    } else {
      field += c;
      row_started = true;
    }
  }
  if (quoted) throw InputError("CSV ends inside a quoted field");
  if (row_started || !field.empty() || !fields.empty()) {
    fields.push_back(std::move(field));
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long long value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw InputError("CSV field " + what + " is not a number: " + text);
  }
}

}  // namespace

bool all_passed(const std::vector<CheckLine>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckLine& c) { return c.passed; });
}

std::vector<CheckLine> verify_certificate(const SetSystem& s,
                                          const Certificate& cert,
                                          const Bits* expected) {
  std::vector<CheckLine> checks;
  run_check(checks, "members-isolate", [&](CheckLine& line) {
    cert.validate(s);
    line.passed = true;
  });
  run_check(checks, "exists-forall-agree", [&](CheckLine& line) {
    for (std::size_t a = 0; a < s.num_columns(); ++a) {
      if (eval_exists(s, cert, a) != eval_forall(s, cert, a)) {
        line.detail = "semantics split at column " + std::to_string(a);
        return;
      }
    }
    line.passed = true;
  });
  run_check(checks, "strict-majority", [&](CheckLine& line) {
    for (std::size_t a = 0; a < s.num_columns(); ++a) {
      std::size_t ones = 0;
      for (const CertificateMember& member : cert.members()) {
        if (member.trace.size() != s.num_columns()) {
          line.detail = "trace width mismatch";
          return;
        }
        if (member.trace[a] != 0) ++ones;
      }
      std::size_t winner = std::max(ones, cert.m() - ones);
      if (2 * winner <= cert.m()) {
        line.detail = "tied vote at column " + std::to_string(a);
        return;
      }
    }
    line.passed = true;
  });
  run_check(checks, "decode-realized", [&](CheckLine& line) {
    Bits bits = decode_bits(s, cert);
    if (!s.find_row(bits)) {
      line.detail = "no row carries " + bits_to_string(bits);
      return;
    }
    line.passed = true;
  });
  if (expected != nullptr) {
    run_check(checks, "decodes-to-target", [&](CheckLine& line) {
      Bits bits = decode_bits(s, cert);
      if (bits != *expected) {
        line.detail = "decoded " + bits_to_string(bits) + ", expected " +
                      bits_to_string(*expected);
        return;
      }
      line.passed = true;
    });
  }
  return checks;
}

const char kExperimentCsvHeader[] =
    "family,columns,rows,vc,dual_vc,n_used,pool_size,game_value,m,k_max,K,"
    "runtime_ms,verification";

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = kExperimentCsvHeader;
  out += '\n';
  for (const ExperimentRecord& rec : records) {
    out += csv_field(rec.family);
    out += ',' + std::to_string(rec.columns);
    out += ',' + std::to_string(rec.rows);
    out += ',' + std::to_string(rec.vc);
    out += ',' + std::to_string(rec.dual_vc);
    out += ',' + std::to_string(rec.n_used);
    out += ',' + std::to_string(rec.pool_size);
    out += ',' + to_string(rec.game_value);
    out += ',' + std::to_string(rec.m);
    out += ',' + std::to_string(rec.k_max);
    out += ',' + std::to_string(rec.parameter_length);
    out += ',' + std::to_string(rec.runtime_ms);
    out += ',' + csv_field(rec.verification);
    out += '\n';
  }
  return out;
}

std::vector<ExperimentRecord> records_from_csv(const std::string& csv) {
  std::vector<std::vector<std::string>> rows = parse_csv(csv);
  if (rows.empty()) throw InputError("CSV has no header line");
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    if (i > 0) header += ',';
    header += rows[0][i];
  }
  if (header != kExperimentCsvHeader) {
    throw InputError("CSV header does not match: " + header);
  }
  std::vector<ExperimentRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::vector<std::string>& fields = rows[i];
    if (fields.size() != 13) {
      throw InputError("CSV line " + std::to_string(i + 1) + " has " +
                       std::to_string(fields.size()) + " fields, expected 13");
    }
    ExperimentRecord rec;
    rec.family = fields[0];
    rec.columns = parse_size(fields[1], "columns");
    rec.rows = parse_size(fields[2], "rows");
    rec.vc = parse_size(fields[3], "vc");
    rec.dual_vc = parse_size(fields[4], "dual_vc");
    rec.n_used = parse_size(fields[5], "n_used");
    rec.pool_size = parse_size(fields[6], "pool_size");
    rec.game_value = rational_from_string(fields[7]);
    rec.m = parse_size(fields[8], "m");
    rec.k_max = parse_size(fields[9], "k_max");
    rec.parameter_length = parse_size(fields[10], "K");
    rec.runtime_ms = parse_size(fields[11], "runtime_ms");
    rec.verification = fields[12];
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ExperimentRecord> run_experiment(
    const std::vector<FamilySpec>& specs, const ExperimentOptions& opts) {
  std::vector<ExperimentRecord> out;
  out.reserve(specs.size());
  for (const FamilySpec& spec : specs) {
    ExperimentRecord rec;
    rec.family = spec.to_string();
    rec.game_value = Rational(0);
    auto started = std::chrono::steady_clock::now();
    try {
      SetSystem s = generate(spec);
      rec.columns = s.num_columns();
      rec.rows = s.num_rows();
      rec.vc = vc_dim(s);
      rec.dual_vc = vc_dim(dual(s));

      SkolemTable table(s, WitnessMode::kIsolatedWitness);
      std::vector<Certificate> certs;
      certs.reserve(s.num_rows());
      std::string failure;
      auto note = [&failure](std::size_t type, const std::string& what) {
        if (failure.empty()) {
          failure = "type " + std::to_string(type) + ": " + what;
        }
      };
      for (std::size_t r = 0; r < s.num_rows(); ++r) {
        CompressionStats stats;
        Certificate cert =
            compress_type(s, TypeOverA::of(s, r), opts.compress, &table,
                          &stats);
        for (const CheckLine& check : verify_certificate(s, cert, &s.row(r))) {
          if (!check.passed) {
            note(r, check.name +
                        (check.detail.empty() ? "" : " (" + check.detail + ")"));
          }
        }
        if (stats.k_max > k_budget(table.column_family_vc(), stats.n_used)) {
          note(r, "member width exceeds the isolation budget");
        }
        rec.n_used = std::max(rec.n_used, stats.n_used);
        rec.pool_size = std::max(rec.pool_size, stats.pool_size);
        rec.m = std::max(rec.m, stats.m);
        rec.k_max = std::max(rec.k_max, stats.k_max);
        if (r == 0 || stats.value < rec.game_value) {
          rec.game_value = stats.value;
        }
        certs.push_back(std::move(cert));
      }

      TemplateResult tpl = make_template(certs);
      rec.parameter_length = tpl.shape.parameter_length;
      for (std::size_t r = 0; r < certs.size(); ++r) {
        Certificate rebuilt = certificate_from_slots(s, tpl.entries[r]);
        if (decode_bits(s, rebuilt) != s.row(r)) {
          note(r, "template roundtrip changed the decode");
        }
      }
      TypeCountReport report =
          count_types_check(s, tpl.shape.parameter_length);
      if (!report.rows_within_bound && failure.empty()) {
        failure = "row count exceeds the parameter bound";
      }
      if (!report.shattered_exact && failure.empty()) {
        failure = "a shattered set misses a trace";
      }
      rec.verification = failure.empty() ? "pass" : "fail: " + failure;
    } catch (const std::exception& e) {
      rec.verification = std::string("fail: ") + e.what();
    }
    if (opts.timing) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      rec.runtime_ms = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
              .count());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace vcdef
