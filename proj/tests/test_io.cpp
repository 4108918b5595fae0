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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "test_util.hpp"
#include "vcdef/errors.hpp"
#include "vcdef/io.hpp"

using namespace vcdef;
using nlohmann::json;
using vcdef_test::mk;

namespace {

// Unique scratch directory per process, removed on teardown.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("vcdef_io_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

SignedTuple tup(std::vector<SignedPair> pairs) {
  return SignedTuple::of(std::move(pairs));
}

}  // namespace

TEST_CASE("system text round-trips") {
  SetSystem s = mk({"0000", "1000", "1100", "1110", "1111"});
  std::ostringstream out;
  system_to_text(s, out);
  CHECK(out.str() == "5 4\n0000\n1000\n1100\n1110\n1111\n");
  std::istringstream in(out.str());
  SetSystem back = system_from_text(in);
  CHECK(back.rows() == s.rows());
  CHECK(back.num_columns() == 4);
}

TEST_CASE("system text rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return system_from_text(in);
  };
  CHECK_THROWS_AS(parse(""), InputError);
  CHECK_THROWS_AS(parse("abc def"), InputError);
  CHECK_THROWS_AS(parse("2 3\n010\n"), InputError);
  CHECK_THROWS_AS(parse("1 3\n01\n"), InputError);
  CHECK_THROWS_AS(parse("1 3\n01x\n"), InputError);
}

TEST_CASE("system JSON round-trips and keeps labels") {
  SetSystem s({"left", "mid", "right"},
              {bits_from_string("010"), bits_from_string("111")});
  json j = system_to_json(s);
  CHECK(j.at("columns") == json::array({"left", "mid", "right"}));
  CHECK(j.at("rows") == json::array({"010", "111"}));
  SetSystem back = system_from_json(j);
  CHECK(back.columns() == s.columns());
  CHECK(back.rows() == s.rows());
}

TEST_CASE("system JSON rejects missing or bad fields") {
  CHECK_THROWS_AS(system_from_json(json::object()), InputError);
  CHECK_THROWS_AS(system_from_json(json{{"columns", {"a"}}}), InputError);
  CHECK_THROWS_AS(
      system_from_json(json{{"columns", {"a"}}, {"rows", {"2"}}}),
      InputError);
  CHECK_THROWS_AS(
      system_from_json(json{{"columns", {"a"}}, {"rows", {7}}}),
      InputError);
}

TEST_CASE("load_system decides the format by the first byte") {
  TempDir dir;
  SetSystem s = mk({"01", "10", "11"});

  spit(dir.file("plain.txt"), "3 2\n01\n10\n11\n");
  SetSystem from_text = load_system(dir.file("plain.txt"));
  CHECK(from_text.rows() == s.rows());

  spit(dir.file("spaced.json"),
       "\n  " + system_to_json(s).dump() + "\n");
  SetSystem from_json = load_system(dir.file("spaced.json"));
  CHECK(from_json.rows() == s.rows());

  CHECK_THROWS_AS(load_system(dir.file("missing.txt")), InputError);
  spit(dir.file("empty.txt"), "  \n ");
  CHECK_THROWS_AS(load_system(dir.file("empty.txt")), InputError);
  spit(dir.file("broken.json"), "{\"columns\": ");
  CHECK_THROWS_AS(load_system(dir.file("broken.json")), InputError);
}

TEST_CASE("save then load preserves a system in both formats") {
  TempDir dir;
  SetSystem s = mk({"0101", "1010", "1111"});
  save_system(s, dir.file("s.txt"));
  save_system(s, dir.file("s.json"), /*as_json=*/true);
  CHECK(load_system(dir.file("s.txt")).rows() == s.rows());
  CHECK(load_system(dir.file("s.json")).rows() == s.rows());
  CHECK(slurp(dir.file("s.json")).front() == '{');
}

TEST_CASE("certificate JSON round-trips") {
  SetSystem s = mk({"0000", "1000", "1100", "1110", "1111"});
  Certificate cert = Certificate::derive(
      s, {tup({{2, 0}, {3, 1}}), tup({{1, 0}, {2, 1}}), tup({{2, 0}, {3, 1}})});
  json j = certificate_to_json(cert);
  CHECK(j.at("m") == 3);
  CHECK(j.at("k_max") == 2);
  CHECK(j.at("traces")[0] == "1110");

  Certificate back = certificate_from_json(j);
  CHECK(back.m() == cert.m());
  CHECK(back.k_max() == cert.k_max());
  for (std::size_t i = 0; i < cert.m(); ++i) {
    CHECK(back.members()[i].tuple == cert.members()[i].tuple);
    CHECK(back.members()[i].trace == cert.members()[i].trace);
  }
  CHECK_NOTHROW(back.validate(s));
}

TEST_CASE("certificate JSON rejects inconsistencies") {
  SetSystem s = mk({"0000", "1000", "1100", "1110", "1111"});
  Certificate cert = Certificate::derive(s, {tup({{2, 0}, {3, 1}})});
  json good = certificate_to_json(cert);

  json doctored = good;
  doctored["m"] = 5;
  CHECK_THROWS_AS(certificate_from_json(doctored), InputError);

  doctored = good;
  doctored["k_max"] = 0;
  CHECK_THROWS_AS(certificate_from_json(doctored), InputError);

  doctored = good;
  doctored["traces"].push_back("0000");
  CHECK_THROWS_AS(certificate_from_json(doctored), InputError);

  doctored = good;
  doctored.erase("traces");
  CHECK_THROWS_AS(certificate_from_json(doctored), InputError);

  doctored = good;
  doctored["members"][0][0][1] = 2;
  CHECK_THROWS_AS(certificate_from_json(doctored), InputError);

  CHECK_THROWS_AS(certificate_from_json(json::object()), InputError);
}

TEST_CASE("certificate files survive a disk round-trip") {
  TempDir dir;
  SetSystem s = mk({"0000", "1000", "1100", "1110", "1111"});
  Certificate cert =
      Certificate::derive(s, {tup({{0, 1}}), tup({{2, 0}, {3, 1}})});
  save_certificate(cert, dir.file("cert.json"));
  Certificate back = load_certificate(dir.file("cert.json"));
  CHECK(back.m() == cert.m());
  CHECK(back.members()[1].tuple == cert.members()[1].tuple);
  CHECK_THROWS_AS(load_certificate(dir.file("nope.json")), InputError);
}

TEST_CASE("teaching and isolation reports carry their fields") {
  SetSystem s = mk({"0000", "1000", "1100", "1110", "1111"});
  TeachingSet t = isolate(s);
  json jt = teaching_to_json(s, t);
  CHECK(jt.at("concept") == t.concept_row);
  CHECK(jt.at("trace") == bits_to_string(s.row(t.concept_row)));
  CHECK(jt.at("points").is_array());

  ConstraintIsolation iso = isolate_under_constraint(s, tup({{0, 0}}));
  json ji = isolation_to_json(iso);
  CHECK(ji.at("p0") == bits_to_string(iso.p0.bits));
  CHECK(ji.at("realizer") == iso.p0.realizer);
  CHECK(ji.at("A0") == json(iso.a0.indices()));
  CHECK(ji.at("budget") == iso.budget);
  CHECK(ji.at("family_vc") == iso.family_vc);
}

TEST_CASE("game and committee reports serialize rationals as fractions") {
  GameMatrix identity({bits_from_string("10"), bits_from_string("01")});
  GameSolution sol = game_value(identity);
  json jg = game_to_json(sol);
  CHECK(jg.at("value") == "1/2");
  CHECK(jg.at("exact") == true);
  CHECK(jg.at("gap") == "0/1");
  CHECK(jg.at("nu").size() == 2);
  CHECK(jg.at("nu")[0] == "1/2");

  Committee c;
  c.members = {{0, 1}, {2, 2}};
  c.m = 3;
  json jc = committee_to_json(c);
  CHECK(jc.at("members") == json::array({{0, 1}, {2, 2}}));
  CHECK(jc.at("m") == 3);

  UniformTemplate shape;
  shape.j_slots = 3;
  shape.k_slots = 2;
  shape.parameter_length = 6;
  json js = template_to_json(shape);
  CHECK(js.at("J_slots") == 3);
  CHECK(js.at("k_slots") == 2);
  CHECK(js.at("K") == 6);
}
