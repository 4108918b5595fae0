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

#ifndef VCDEF_TEACHING_HPP_
#define VCDEF_TEACHING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "vcdef/set_system.hpp"

namespace vcdef {

// Budgets for the isolation recursion. One recursion level at dimension n
// spends 2^n(n-1)+1 points; t(n) is the total over a descent from dimension
// n, and k(n, m) = t(2^(n+1)-1) + m covers isolation relative to a
// constraint of m literals when n bounds the column family's dimension.
// All three saturate at UINT64_MAX instead of overflowing.
std::uint64_t isolation_step_budget(std::uint64_t n);
std::uint64_t t_budget(std::uint64_t n);
std::uint64_t k_budget(std::uint64_t n, std::uint64_t m);

struct IsolationBudget {
  std::uint64_t n = 0;
  std::uint64_t t_of_n = 0;

  static IsolationBudget for_dimension(std::uint64_t n);
};

// A row plus points whose trace pins it down: any row agreeing with the
// concept on `points` agrees with it on every column in scope.
struct TeachingSet {
  std::size_t concept_row = 0;
  PointSet points;
};

// Finds some row determined by at most t_budget(vc_dim(s)) points. Each
// level picks the point set b of size min(2^n(n-1)+1, columns), n the
// current subfamily's dimension, whose smallest nonempty trace bucket is
// minimal (ties: lexicographically least b, then least trace), and recurses
// into that bucket. The result is re-verified against every row. Requires a
// canonical system.
TeachingSet isolate(const SetSystem& s);

// Smallest point set distinguishing the concept from all other rows, by
// exhaustive search over subsets in size-then-lexicographic order. Refuses
// (InputError) once more than `cutoff` candidate subsets have been examined.
PointSet min_teaching_set(const SetSystem& s, std::size_t concept_row,
                          std::uint64_t cutoff = 1u << 20);

// Repeatedly isolates and removes a row until none remain. Each entry's
// points are valid relative to the rows not yet removed at that step, and
// concept_row refers to the original system.
std::vector<TeachingSet> teaching_sequence(const SetSystem& s);

// One literal of a constraint: sign 0 requires the bit at `column` to be 1,
// sign 1 requires it to be 0.
struct SignedPair {
  std::size_t column = 0;
  int sign = 0;

  friend bool operator==(const SignedPair& a, const SignedPair& b) {
    return a.column == b.column && a.sign == b.sign;
  }
  friend bool operator<(const SignedPair& a, const SignedPair& b) {
    return a.column != b.column ? a.column < b.column : a.sign < b.sign;
  }
};

// A conjunction of signed literals in canonical form: sorted by column,
// exact duplicates merged. A column constrained with both signs marks the
// tuple contradictory; it then satisfies no row but keeps its literals so
// distinct contradictions stay distinct as map keys.
class SignedTuple {
 public:
  SignedTuple() = default;

  static SignedTuple of(std::vector<SignedPair> pairs);

  const std::vector<SignedPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contradictory() const { return contradictory_; }

  // The constrained columns, each once.
  PointSet columns() const;

  bool satisfied_by(const Bits& row) const;

  void validate_against(std::size_t num_columns) const;

  friend bool operator==(const SignedTuple& a, const SignedTuple& b) {
    return a.pairs_ == b.pairs_;
  }
  friend bool operator<(const SignedTuple& a, const SignedTuple& b) {
    return a.pairs_ < b.pairs_;
  }

 private:
  std::vector<SignedPair> pairs_;
  bool contradictory_ = false;
};

// Isolation of a row among the rows satisfying a constraint. p0 satisfies
// the constraint, and any row agreeing with p0 on a0 equals p0 outright
// (a0 contains the constraint's columns, so such a row satisfies the
// constraint too). |a0| <= budget = k_budget(n, constraint size), n the
// column family's dimension; family_vc records the actual dimension of the
// satisfying family restricted away from the constraint's columns.
struct ConstraintIsolation {
  TypeOverA p0;
  PointSet a0;
  std::uint64_t budget = 0;
  std::size_t family_vc = 0;
};

// Pass column_family_vc = vc_dim(dual(s)) when it is already known to skip
// recomputing it. Throws UnsatisfiableConstraint when no row satisfies chi.
ConstraintIsolation isolate_under_constraint(
    const SetSystem& s, const SignedTuple& chi,
    std::optional<std::size_t> column_family_vc = std::nullopt);

}  // namespace vcdef

#endif  // VCDEF_TEACHING_HPP_
