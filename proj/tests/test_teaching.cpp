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

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "test_util.hpp"
#include "vcdef/errors.hpp"
#include "vcdef/teaching.hpp"

using namespace vcdef;
using vcdef_test::mk;

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

SetSystem thresholds(std::size_t n) {
  std::vector<Bits> rows;
  for (std::size_t t = 0; t <= n; ++t) {
    Bits r(n, 0);
    for (std::size_t j = 0; j < t; ++j) r[j] = 1;
    rows.push_back(std::move(r));
  }
  return SetSystem::from_rows(n, std::move(rows)).canonical();
}

SetSystem powerset(std::size_t n) {
  std::vector<Bits> rows;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Bits r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = (mask >> j) & 1;
    rows.push_back(std::move(r));
  }
  return SetSystem::from_rows(n, std::move(rows)).canonical();
}

// True when `points` distinguishes row `concept_row` from every other row.
bool distinguishes(const SetSystem& s, std::size_t concept_row,
                   const PointSet& points) {
  for (std::size_t r = 0; r < s.num_rows(); ++r) {
    if (r == concept_row) continue;
    bool agrees = true;
    for (std::size_t c : points.indices()) {
      if (s.bit(r, c) != s.bit(concept_row, c)) agrees = false;
    }
    if (agrees) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("step budget follows its closed form") {
  CHECK(isolation_step_budget(0) == 0);
  CHECK(isolation_step_budget(1) == 1);
  CHECK(isolation_step_budget(2) == 5);
  CHECK(isolation_step_budget(3) == 17);
  CHECK(isolation_step_budget(4) == 49);
  CHECK(isolation_step_budget(200) == kMax);
}

TEST_CASE("cumulative budget matches the recursion") {
  CHECK(t_budget(0) == 0);
  CHECK(t_budget(1) == 1);
  CHECK(t_budget(2) == 6);
  CHECK(t_budget(3) == 23);
  CHECK(t_budget(7) == 1291);
  CHECK(t_budget(15) == 851987);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    CHECK(t_budget(n) == t_budget(n - 1) + isolation_step_budget(n));
    CHECK(t_budget(n) > t_budget(n - 1));
  }
  CHECK(t_budget(1000) == kMax);
  CHECK(IsolationBudget::for_dimension(2).t_of_n == 6);
}

TEST_CASE("constraint budget composes the cumulative one") {
  CHECK(k_budget(0, 0) == 1);
  CHECK(k_budget(0, 3) == 4);
  CHECK(k_budget(1, 0) == 23);
  CHECK(k_budget(2, 4) == 1295);
  CHECK(k_budget(63, 5) == kMax);
  CHECK(k_budget(5, kMax) == kMax);
}

TEST_CASE("isolating a single row needs no points") {
  SetSystem s = mk({"0110"});
  TeachingSet t = isolate(s);
  CHECK(t.concept_row == 0);
  CHECK(t.points.empty());
}

TEST_CASE("isolation requires a canonical system") {
  SetSystem s = SetSystem::from_rows(
      2, {bits_from_string("10"), bits_from_string("01")});
  CHECK_FALSE(s.is_canonical());
  CHECK_THROWS_AS(isolate(s), InputError);
}

TEST_CASE("thresholds isolate the empty row through its first column") {
  SetSystem s = thresholds(4);
  TeachingSet t = isolate(s);
  CHECK(s.row(t.concept_row) == bits_from_string("0000"));
  CHECK(t.points == PointSet::of({0}));
  CHECK(t.points.size() <= t_budget(vc_dim(s)));
}

TEST_CASE("a power set concept needs its full trace") {
  SetSystem s = powerset(2);
  TeachingSet t = isolate(s);
  CHECK(t.points.size() <= t_budget(2));
  CHECK(distinguishes(s, t.concept_row, t.points));
  // No strict subset can work here: every pair of rows differs in one bit.
  CHECK(min_teaching_set(s, t.concept_row) == PointSet::of({0, 1}));
}

TEST_CASE("isolation respects budget and uniqueness on random systems") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SetSystem s = vcdef_test::random_system(7, 40, 3100 + seed).canonical();
    TeachingSet t = isolate(s);
    CHECK(t.points.size() <= t_budget(vc_dim(s)));
    CHECK(distinguishes(s, t.concept_row, t.points));
    CHECK(min_teaching_set(s, t.concept_row).size() <= t.points.size());
  }
}

TEST_CASE("minimal teaching sets by exhaustive search") {
  CHECK(min_teaching_set(mk({"0110"}), 0) == PointSet());
  SetSystem s = thresholds(4);
  const std::size_t empty_row = *s.find_row(bits_from_string("0000"));
  CHECK(min_teaching_set(s, empty_row) == PointSet::of({0}));
  const std::size_t middle = *s.find_row(bits_from_string("1100"));
  CHECK(min_teaching_set(s, middle) == PointSet::of({1, 2}));
  CHECK_THROWS_AS(min_teaching_set(s, 99), InputError);
}

TEST_CASE("the exhaustive search refuses past its cutoff") {
  SetSystem s = powerset(4);
  CHECK_THROWS_AS(min_teaching_set(s, 5, 3), InputError);
}

TEST_CASE("teaching sequence peels every row validly") {
  SetSystem s = thresholds(4);
  std::vector<TeachingSet> seq = teaching_sequence(s);
  REQUIRE(seq.size() == s.num_rows());
  for (const TeachingSet& t : seq) CHECK(t.points.size() <= 1);

  std::vector<std::size_t> remaining(s.num_rows());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  for (const TeachingSet& t : seq) {
    auto here = std::find(remaining.begin(), remaining.end(), t.concept_row);
    REQUIRE(here != remaining.end());
    // Valid relative to the rows not yet removed.
    for (std::size_t other : remaining) {
      if (other == t.concept_row) continue;
      bool agrees = true;
      for (std::size_t c : t.points.indices()) {
        if (s.bit(other, c) != s.bit(t.concept_row, c)) agrees = false;
      }
      CHECK_FALSE(agrees);
    }
    remaining.erase(here);
  }
  CHECK(remaining.empty());
}

TEST_CASE("teaching sequence on a power set stays within budget") {
  SetSystem s = powerset(2);
  std::vector<TeachingSet> seq = teaching_sequence(s);
  REQUIRE(seq.size() == 4);
  for (const TeachingSet& t : seq) CHECK(t.points.size() <= t_budget(2));
  // Peeling reaches a single row whose teaching set is empty.
  CHECK(seq.back().points.empty());
}

TEST_CASE("signed tuples canonicalize") {
  SignedTuple chi = SignedTuple::of({{3, 0}, {1, 1}, {3, 0}});
  REQUIRE(chi.size() == 2);
  CHECK(chi.pairs()[0] == SignedPair{1, 1});
  CHECK(chi.pairs()[1] == SignedPair{3, 0});
  CHECK_FALSE(chi.contradictory());
  CHECK(chi.columns() == PointSet::of({1, 3}));
  CHECK_THROWS_AS(SignedTuple::of({{0, 2}}), InputError);
}

TEST_CASE("sign zero asserts the bit, sign one denies it") {
  const Bits row = bits_from_string("10");
  CHECK(SignedTuple::of({{0, 0}}).satisfied_by(row));
  CHECK_FALSE(SignedTuple::of({{0, 1}}).satisfied_by(row));
  CHECK(SignedTuple::of({{1, 1}}).satisfied_by(row));
  CHECK_FALSE(SignedTuple::of({{1, 0}}).satisfied_by(row));
  CHECK(SignedTuple().satisfied_by(row));
  CHECK_THROWS_AS(SignedTuple::of({{5, 0}}).satisfied_by(row), InputError);
}

TEST_CASE("contradictory tuples satisfy nothing but stay distinct") {
  SignedTuple a = SignedTuple::of({{0, 0}, {0, 1}});
  SignedTuple b = SignedTuple::of({{1, 0}, {1, 1}});
  CHECK(a.contradictory());
  CHECK_FALSE(a.satisfied_by(bits_from_string("11")));
  CHECK_FALSE(a == b);
  std::map<SignedTuple, int> keyed;
  keyed[a] = 1;
  keyed[b] = 2;
  CHECK(keyed.size() == 2);
}

TEST_CASE("a constraint pinning one row isolates it with its own columns") {
  SetSystem s = thresholds(4);
  SignedTuple chi = SignedTuple::of({{0, 0}, {1, 1}});
  ConstraintIsolation iso = isolate_under_constraint(s, chi);
  CHECK(iso.p0.bits == bits_from_string("1000"));
  CHECK(iso.a0 == PointSet::of({0, 1}));
  CHECK(iso.family_vc == 0);
  CHECK(chi.satisfied_by(iso.p0.bits));
}

TEST_CASE("an empty constraint reduces to plain isolation") {
  SetSystem s = thresholds(4);
  ConstraintIsolation iso = isolate_under_constraint(s, SignedTuple());
  TeachingSet t = isolate(s);
  CHECK(iso.p0.realizer == t.concept_row);
  CHECK(iso.a0 == t.points);
}

TEST_CASE("constraint isolation on thresholds") {
  SetSystem s = thresholds(4);
  SignedTuple chi = SignedTuple::of({{0, 0}});
  ConstraintIsolation iso = isolate_under_constraint(s, chi);
  CHECK(chi.satisfied_by(iso.p0.bits));
  CHECK(iso.p0.bits == bits_from_string("1000"));
  CHECK(iso.a0 == PointSet::of({0, 1}));
  CHECK(iso.family_vc == 1);
  CHECK(iso.budget == k_budget(vc_dim(dual(s)), 1));
  CHECK(iso.a0.size() <= iso.budget);
}

TEST_CASE("unsatisfiable constraints are rejected") {
  SetSystem s = thresholds(4);
  CHECK_THROWS_AS(
      isolate_under_constraint(s, SignedTuple::of({{0, 1}, {3, 0}})),
      UnsatisfiableConstraint);
  CHECK_THROWS_AS(
      isolate_under_constraint(s, SignedTuple::of({{1, 0}, {1, 1}})),
      UnsatisfiableConstraint);
  CHECK_THROWS_AS(
      isolate_under_constraint(s, SignedTuple::of({{17, 0}})), InputError);
}

TEST_CASE("a constraint covering every column leaves nothing to isolate") {
  SetSystem s = powerset(2);
  SignedTuple chi = SignedTuple::of({{0, 0}, {1, 1}});
  ConstraintIsolation iso = isolate_under_constraint(s, chi);
  CHECK(iso.p0.bits == bits_from_string("10"));
  CHECK(iso.a0 == PointSet::of({0, 1}));
}

TEST_CASE("constraint isolation determines the row among all rows") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    SetSystem s = vcdef_test::random_system(6, 28, 5200 + trial).canonical();
    const std::size_t dual_vc = vc_dim(dual(s));

    // A constraint of up to three literals drawn from a real row is always
    // satisfiable.
    const Bits& source = s.row(rng() % s.num_rows());
    std::vector<SignedPair> literals;
    const std::size_t len = 1 + rng() % 3;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t col = rng() % s.num_columns();
      literals.push_back({col, source[col] ? 0 : 1});
    }
    SignedTuple chi = SignedTuple::of(std::move(literals));

    ConstraintIsolation iso = isolate_under_constraint(s, chi, dual_vc);
    CHECK(chi.satisfied_by(iso.p0.bits));
    CHECK(iso.a0.size() <= iso.budget);
    CHECK(iso.budget == k_budget(dual_vc, chi.size()));
    for (std::size_t r = 0; r < s.num_rows(); ++r) {
      if (r == iso.p0.realizer) continue;
      bool agrees = true;
      for (std::size_t c : iso.a0.indices()) {
        if (s.bit(r, c) != iso.p0.bits[c]) agrees = false;
      }
      CHECK_FALSE(agrees);
    }
  }
}
