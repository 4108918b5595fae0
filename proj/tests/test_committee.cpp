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

#include "test_util.hpp"
#include "vcdef/committee.hpp"
#include "vcdef/errors.hpp"

using namespace vcdef;

namespace {

GameMatrix from_strings(const std::vector<std::string>& rows) {
  std::vector<Bits> bits;
  for (const std::string& r : rows) bits.push_back(bits_from_string(r));
  return GameMatrix(std::move(bits));
}

SetSystem thresholds(std::size_t n) {
  std::vector<Bits> rows;
  for (std::size_t t = 0; t <= n; ++t) {
    Bits r(n, 0);
    for (std::size_t j = 0; j < t; ++j) r[j] = 1;
    rows.push_back(std::move(r));
  }
  return SetSystem::from_rows(n, std::move(rows)).canonical();
}

void check_strict_majority(const GameMatrix& b, const Committee& c) {
  REQUIRE(c.m >= 1);
  for (std::size_t i = 0; i < b.num_rows(); ++i) {
    std::size_t agreeing = 0;
    for (const auto& [position, count] : c.members) {
      if (b.at(i, position)) agreeing += count;
    }
    CHECK(2 * agreeing > c.m);
  }
}

}  // namespace

TEST_CASE("a point mass on a perfect hypothesis is a committee of one") {
  GameMatrix b = from_strings({"100", "110", "101"});
  Committee c = build_committee(b, Measure::point_mass(3, 0));
  CHECK(c.m == 1);
  REQUIRE(c.members.size() == 1);
  CHECK(c.members[0] == std::pair<std::size_t, std::size_t>{0, 1});
  check_strict_majority(b, c);
}

TEST_CASE("an all-ones matrix admits a singleton committee") {
  GameMatrix b = from_strings({"111", "111"});
  Committee c = build_committee(b, Measure::uniform(3));
  CHECK(c.m == 1);
  check_strict_majority(b, c);
}

TEST_CASE("strategies below the bound are rejected") {
  GameMatrix b = from_strings({"10", "01"});
  CHECK_THROWS_AS(build_committee(b, Measure::uniform(2)), InputError);
}

TEST_CASE("excessive solver slack is rejected") {
  GameMatrix b = from_strings({"11", "11"});
  CommitteeOptions opts;
  opts.solver_slack = Rational(1, 4);
  CHECK_THROWS_AS(build_committee(b, Measure::uniform(2), opts), InputError);
}

TEST_CASE("mismatched strategy width is rejected") {
  GameMatrix b = from_strings({"11", "11"});
  CHECK_THROWS_AS(build_committee(b, Measure::uniform(3)), InputError);
}

TEST_CASE("the cyclic majority game yields a working committee") {
  GameMatrix b = from_strings({"110", "101", "011"});
  GameSolution g = game_value(b);
  REQUIRE(g.value == Rational(2, 3));
  Committee c = build_committee(b, g.nu);
  check_strict_majority(b, c);
}

TEST_CASE("the certified iterative strategy still carries a committee") {
  GameMatrix b = from_strings({"110", "101", "011"});
  SolverOptions solver;
  solver.force_approx = true;
  GameSolution g = solve_game(b, solver);
  REQUIRE(g.value >= Rational(2, 3) - g.gap);

  CommitteeOptions opts;
  opts.solver_slack = Rational(1, 48);
  Committee c = build_committee(b, g.nu, opts);
  check_strict_majority(b, c);
}

TEST_CASE("pipeline committees vote correctly on a threshold system") {
  SetSystem s = thresholds(6);
  SkolemTable table(s, WitnessMode::kIsolatedWitness);
  TypeOverA p = TypeOverA::of(s, 3);
  HypothesisPool pool = build_pool(s, p, table, s.num_columns());
  GameMatrix b = GameMatrix::agreement(s, p, pool);
  GameSolution g = game_value(b);
  REQUIRE(g.value >= Rational(2, 3));

  Committee c = build_committee(b, g.nu);
  check_strict_majority(b, c);

  // The same majority read off the raw rows rather than the matrix.
  for (std::size_t a = 0; a < s.num_columns(); ++a) {
    std::size_t agreeing = 0;
    for (const auto& [position, count] : c.members) {
      if (s.bit(pool.rows[position], a) == s.bit(3, a)) agreeing += count;
    }
    CHECK(2 * agreeing > c.m);
  }
}
