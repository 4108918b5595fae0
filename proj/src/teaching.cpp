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

#include "vcdef/teaching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "vcdef/errors.hpp"

namespace vcdef {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatedAdd(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Calls fn with every size-w subset of {0..n-1} as a strictly increasing
// index vector, in lexicographic order. fn returns false to stop early.
template <typename Fn>
void ForEachCombination(std::size_t n, std::size_t w, Fn&& fn) {
  if (w > n) return;
  std::vector<std::size_t> idx(w);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == n - w + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SetSystem Subsystem(const SetSystem& s, const std::vector<std::size_t>& keep) {
  std::vector<Bits> rows;
  rows.reserve(keep.size());
  for (std::size_t i : keep) rows.push_back(s.row(i));
  return SetSystem::from_rows(s.num_columns(), std::move(rows));
}

Bits TraceOn(const Bits& row, const std::vector<std::size_t>& cols) {
  Bits trace(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) trace[i] = row[cols[i]];
  return trace;
}

bool AgreesOn(const Bits& a, const Bits& b, const PointSet& points) {
  for (std::size_t c : points.indices()) {
    if (a[c] != b[c]) return false;
  }
  return true;
}

void VerifyTeachingSet(const SetSystem& s, const TeachingSet& result) {
  const Bits& concept_bits = s.row(result.concept_row);
  for (std::size_t r = 0; r < s.num_rows(); ++r) {
    if (r == result.concept_row) continue;
    if (AgreesOn(s.row(r), concept_bits, result.points)) {
      throw VerificationError(
          "teaching set fails to distinguish its concept from row " +
          std::to_string(r));
    }
  }
}

}  // namespace

std::uint64_t isolation_step_budget(std::uint64_t n) {
  // 2^n (n-1) + 1 exceeds UINT64_MAX from n = 59 on.
  if (n > 120) return kSaturated;
  const __int128 value = (static_cast<__int128>(1) << n) *
                             (static_cast<__int128>(n) - 1) +
                         1;
  if (value > static_cast<__int128>(kSaturated)) return kSaturated;
  return static_cast<std::uint64_t>(value);
}

std::uint64_t t_budget(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 1; i <= n && i != 0; ++i) {
    const std::uint64_t step = isolation_step_budget(i);
    if (step == kSaturated) return kSaturated;
    total = SaturatedAdd(total, step);
    if (total == kSaturated) return kSaturated;
  }
  return total;
}

std::uint64_t k_budget(std::uint64_t n, std::uint64_t m) {
  const std::uint64_t doubled =
      n >= 63 ? kSaturated : (std::uint64_t{1} << (n + 1)) - 1;
  return SaturatedAdd(t_budget(doubled), m);
}

IsolationBudget IsolationBudget::for_dimension(std::uint64_t n) {
  return IsolationBudget{n, t_budget(n)};
}

TeachingSet isolate(const SetSystem& s) {
  if (!s.is_canonical()) {
    throw InputError("isolate requires a canonical system");
  }
  const std::size_t cols = s.num_columns();
  const std::size_t initial_vc = vc_dim(s);

  std::vector<std::size_t> family(s.num_rows());
  std::iota(family.begin(), family.end(), std::size_t{0});
  std::vector<bool> used(cols, false);

  while (family.size() > 1) {
    const std::size_t d = vc_dim(Subsystem(s, family));
    const std::uint64_t step = isolation_step_budget(d);
    const std::size_t width =
        step >= cols ? cols : static_cast<std::size_t>(step);

    // Smallest nonempty trace bucket over every point set of this width.
    // Lexicographic subset order plus ascending trace order plus strict
    // improvement makes the choice deterministic.
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best_b;
    std::vector<std::size_t> best_bucket;
    ForEachCombination(cols, width, [&](const std::vector<std::size_t>& b) {
      std::map<Bits, std::vector<std::size_t>> buckets;
      for (std::size_t r : family) buckets[TraceOn(s.row(r), b)].push_back(r);
      for (const auto& [trace, members] : buckets) {
        if (members.size() < best_size) {
          best_size = members.size();
          best_b = b;
          best_bucket = members;
        }
      }
      return best_size > 1;  // a singleton bucket cannot be beaten
    });

    if (best_bucket.size() >= family.size()) {
      throw VerificationError("isolation step failed to shrink the family");
    }
    family = std::move(best_bucket);
    for (std::size_t c : best_b) used[c] = true;
  }

  std::vector<std::size_t> points;
  for (std::size_t c = 0; c < cols; ++c) {
    if (used[c]) points.push_back(c);
  }
  TeachingSet result{family.front(), PointSet::of(std::move(points))};

  if (result.points.size() > t_budget(initial_vc)) {
    throw VerificationError("teaching set exceeds its budget");
  }
  VerifyTeachingSet(s, result);
  return result;
}

PointSet min_teaching_set(const SetSystem& s, std::size_t concept_row,
                          std::uint64_t cutoff) {
  if (!s.is_canonical()) {
    throw InputError("min_teaching_set requires a canonical system");
  }
  if (concept_row >= s.num_rows()) {
    throw InputError("concept row out of range");
  }
  const Bits& target = s.row(concept_row);
  const std::size_t cols = s.num_columns();

  std::uint64_t examined = 0;
  for (std::size_t size = 0; size <= cols; ++size) {
    std::optional<PointSet> found;
    ForEachCombination(cols, size, [&](const std::vector<std::size_t>& t) {
      if (++examined > cutoff) {
        throw InputError("teaching-set search exceeds cutoff of " +
                         std::to_string(cutoff) + " candidates");
      }
      PointSet candidate = PointSet::of(t);
      for (std::size_t r = 0; r < s.num_rows(); ++r) {
        if (r == concept_row) continue;
        if (AgreesOn(s.row(r), target, candidate)) return true;  // keep going
      }
      found = std::move(candidate);
      return false;
    });
    if (found) return *found;
  }
  throw VerificationError("no distinguishing point set exists; duplicate row");
}

std::vector<TeachingSet> teaching_sequence(const SetSystem& s) {
  if (!s.is_canonical()) {
    throw InputError("teaching_sequence requires a canonical system");
  }
  std::vector<std::size_t> remaining(s.num_rows());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});

  std::vector<TeachingSet> sequence;
  while (!remaining.empty()) {
    TeachingSet local = isolate(Subsystem(s, remaining));
    sequence.push_back(
        TeachingSet{remaining[local.concept_row], std::move(local.points)});
    remaining.erase(remaining.begin() +
                    static_cast<std::ptrdiff_t>(local.concept_row));
  }
  return sequence;
}

SignedTuple SignedTuple::of(std::vector<SignedPair> pairs) {
  for (const SignedPair& p : pairs) {
    if (p.sign != 0 && p.sign != 1) {
      throw InputError("literal sign must be 0 or 1");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  SignedTuple tuple;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].column == pairs[i - 1].column) tuple.contradictory_ = true;
  }
  tuple.pairs_ = std::move(pairs);
  return tuple;
}

PointSet SignedTuple::columns() const {
  std::vector<std::size_t> cols;
  for (const SignedPair& p : pairs_) {
    if (cols.empty() || cols.back() != p.column) cols.push_back(p.column);
  }
  return PointSet::of(std::move(cols));
}

bool SignedTuple::satisfied_by(const Bits& row) const {
  if (contradictory_) return false;
  for (const SignedPair& p : pairs_) {
    if (p.column >= row.size()) {
      throw InputError("literal column out of range");
    }
    const bool want_one = p.sign == 0;
    if ((row[p.column] != 0) != want_one) return false;
  }
  return true;
}

void SignedTuple::validate_against(std::size_t num_columns) const {
  for (const SignedPair& p : pairs_) {
    if (p.column >= num_columns) {
      throw InputError("literal column " + std::to_string(p.column) +
                       " out of range for " + std::to_string(num_columns) +
                       " columns");
    }
  }
}

ConstraintIsolation isolate_under_constraint(
    const SetSystem& s, const SignedTuple& chi,
    std::optional<std::size_t> column_family_vc) {
  if (!s.is_canonical()) {
    throw InputError("isolate_under_constraint requires a canonical system");
  }
  chi.validate_against(s.num_columns());

  std::vector<std::size_t> satisfying;
  for (std::size_t r = 0; r < s.num_rows(); ++r) {
    if (chi.satisfied_by(s.row(r))) satisfying.push_back(r);
  }
  if (satisfying.empty()) {
    throw UnsatisfiableConstraint("no row satisfies the constraint");
  }

  const std::size_t n =
      column_family_vc ? *column_family_vc : vc_dim(dual(s));
  const PointSet chi_cols = chi.columns();

  std::vector<std::size_t> unconstrained;
  for (std::size_t c = 0; c < s.num_columns(); ++c) {
    if (!chi_cols.contains(c)) unconstrained.push_back(c);
  }

  std::size_t isolated_row = satisfying.front();
  PointSet x0;
  std::size_t family_vc = 0;
  if (satisfying.size() > 1) {
    // The satisfying rows agree on every constrained column, so their
    // restrictions to the unconstrained ones are pairwise distinct and the
    // restricted family isolates on behalf of the full one.
    std::vector<std::pair<Bits, std::size_t>> restricted;
    restricted.reserve(satisfying.size());
    for (std::size_t r : satisfying) {
      restricted.emplace_back(TraceOn(s.row(r), unconstrained), r);
    }
    std::sort(restricted.begin(), restricted.end());
    std::vector<Bits> rows;
    rows.reserve(restricted.size());
    for (auto& [bits, original] : restricted) rows.push_back(bits);

    SetSystem family = SetSystem::from_rows(unconstrained.size(), rows);
    if (!family.is_canonical()) {
      throw VerificationError(
          "satisfying rows collide outside the constraint's columns");
    }
    family_vc = vc_dim(family);
    TeachingSet local = isolate(family);
    isolated_row = restricted[local.concept_row].second;

    std::vector<std::size_t> mapped;
    for (std::size_t c : local.points.indices()) {
      mapped.push_back(unconstrained[c]);
    }
    x0 = PointSet::of(std::move(mapped));
  }

  ConstraintIsolation result{
      TypeOverA::of(s, isolated_row), x0.united_with(chi_cols),
      k_budget(n, chi.size()), family_vc};

  if (result.a0.size() > result.budget) {
    throw VerificationError("isolation exceeds its budget");
  }
  // Agreement with p0 on a0 must force the whole row; a0 covers the
  // constraint's columns, so agreement also implies satisfying it.
  for (std::size_t r = 0; r < s.num_rows(); ++r) {
    if (r == result.p0.realizer) continue;
    if (AgreesOn(s.row(r), result.p0.bits, result.a0)) {
      throw VerificationError("isolation under constraint is not unique");
    }
  }
  return result;
}

}  // namespace vcdef
