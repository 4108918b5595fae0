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

#include "vcdef/skolem.hpp"

#include <algorithm>
#include <numeric>

#include "vcdef/eps_approx.hpp"
#include "vcdef/errors.hpp"

namespace vcdef {

SignedTuple induced_signs(const PointSet& columns, const Bits& row) {
  std::vector<SignedPair> pairs;
  pairs.reserve(columns.size());
  for (std::size_t c : columns.indices()) {
    if (c >= row.size()) throw InputError("sign column out of range");
    pairs.push_back({c, row[c] ? 0 : 1});
  }
  return SignedTuple::of(std::move(pairs));
}

SkolemTable::SkolemTable(const SetSystem& s, WitnessMode mode)
    : system_(s.is_canonical() ? s : s.canonical()),
      mode_(mode),
      column_family_vc_(vc_dim(dual(system_))) {}

const SkolemWitness& SkolemTable::witness(const SignedTuple& chi) {
  if (auto it = cache_.find(chi); it != cache_.end()) return it->second;
  chi.validate_against(system_.num_columns());

  SkolemWitness entry;
  if (mode_ == WitnessMode::kFirstWitness) {
    for (std::size_t r = 0; r < system_.num_rows(); ++r) {
      if (chi.satisfied_by(system_.row(r))) {
        entry.satisfiable = true;
        entry.row = r;
        break;
      }
    }
  } else {
    try {
      ConstraintIsolation iso =
          isolate_under_constraint(system_, chi, column_family_vc_);
      entry.satisfiable = true;
      entry.row = iso.p0.realizer;
      entry.isolation = std::move(iso.a0);
    } catch (const UnsatisfiableConstraint&) {
      // falls through to the cached unsatisfiable entry
    }
  }
  return cache_.emplace(chi, std::move(entry)).first->second;
}

std::optional<std::size_t> HypothesisPool::position_of_row(
    std::size_t s_row) const {
  auto it = std::find(rows.begin(), rows.end(), s_row);
  if (it == rows.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rows.begin());
}

namespace {

// Pool positions and witness rows index the table's system; mixing tables
// across systems would silently misattribute rows.
void RequireSameSystem(const SetSystem& s, const SkolemTable& table) {
  if (table.system().rows() != s.rows()) {
    throw InputError("witness table was built over a different system");
  }
}

// Size-w subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void ForEachSubset(std::size_t n, std::size_t w, Fn&& fn) {
  if (w > n) return;
  std::vector<std::size_t> idx(w);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(idx);
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == n - w + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

HypothesisPool build_pool(const SetSystem& s, const TypeOverA& p,
                          SkolemTable& table, std::size_t n) {
  if (p.bits.size() != s.num_columns()) {
    throw InputError("type width does not match the system");
  }
  if (p.realizer >= s.num_rows() || s.row(p.realizer) != p.bits) {
    throw InputError("type is not realized at its recorded row");
  }
  RequireSameSystem(s, table);

  HypothesisPool pool;
  std::vector<bool> seen(table.system().num_rows(), false);
  const std::size_t cap = std::min(n, s.num_columns());
  for (std::size_t size = 0; size <= cap; ++size) {
    ForEachSubset(s.num_columns(), size,
                  [&](const std::vector<std::size_t>& subset) {
                    SignedTuple chi =
                        induced_signs(PointSet::of(subset), p.bits);
                    const SkolemWitness& w = table.witness(chi);
                    if (!w.satisfiable) {
                      throw VerificationError(
                          "constraint induced by a realized type has no "
                          "witness");
                    }
                    if (!seen[w.row]) {
                      seen[w.row] = true;
                      pool.rows.push_back(w.row);
                      pool.provenance.push_back(std::move(chi));
                    }
                  });
  }
  return pool;
}

std::optional<PointSet> agreement_tuple(const SetSystem& s,
                                        const TypeOverA& p, const Measure& mu,
                                        SkolemTable& table, std::size_t budget,
                                        std::uint64_t seed) {
  if (p.bits.size() != s.num_columns()) {
    throw InputError("type width does not match the system");
  }
  RequireSameSystem(s, table);
  SetSystem differences = symmetric_difference_family(s);
  std::optional<Multiset> approx =
      find_approximation(differences, mu, Rational(1, 3), budget, seed);
  if (!approx) return std::nullopt;

  PointSet tuple = PointSet::of(approx->support());
  const SkolemWitness& w = table.witness(induced_signs(tuple, p.bits));
  if (!w.satisfiable) {
    throw VerificationError("induced constraint lost its witness");
  }
  // The witness's disagreement set with p appears in the difference family
  // and misses the approximation's support entirely, so its measure is at
  // most 0 + 1/3; re-check the complementary bound directly.
  const Bits& witness_bits = table.system().row(w.row);
  Bits agreement(s.num_columns());
  for (std::size_t a = 0; a < s.num_columns(); ++a) {
    agreement[a] = witness_bits[a] == p.bits[a];
  }
  if (mu.mass_of_row(agreement) < Rational(2, 3)) {
    throw VerificationError("witness agreement fell below two thirds");
  }
  return tuple;
}

}  // namespace vcdef
