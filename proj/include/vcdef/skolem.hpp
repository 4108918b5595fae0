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

#ifndef VCDEF_SKOLEM_HPP_
#define VCDEF_SKOLEM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "vcdef/measure.hpp"
#include "vcdef/set_system.hpp"
#include "vcdef/teaching.hpp"

namespace vcdef {

// The signs a given row induces on a column set: the unique signed tuple on
// those columns that the row satisfies (bit 1 picks sign 0, bit 0 picks
// sign 1).
SignedTuple induced_signs(const PointSet& columns, const Bits& row);

enum class WitnessMode {
  kFirstWitness,     // least-index satisfying row
  kIsolatedWitness,  // realizer of isolate_under_constraint, A0 recorded
};

struct SkolemWitness {
  bool satisfiable = false;
  std::size_t row = 0;                 // meaningful only when satisfiable
  std::optional<PointSet> isolation;   // A0, isolated mode only
};

// Lazily populated witness table over one canonical system. Queries are
// cached by canonical SignedTuple, unsatisfiable ones included, so repeated
// lookups are cheap and results never depend on query order.
class SkolemTable {
 public:
  SkolemTable(const SetSystem& s, WitnessMode mode);

  const SetSystem& system() const { return system_; }
  WitnessMode mode() const { return mode_; }

  // The column family's dimension (of the transposed system), fixed at
  // construction; isolation budgets are stated in terms of it.
  std::size_t column_family_vc() const { return column_family_vc_; }

  const SkolemWitness& witness(const SignedTuple& chi);

 private:
  SetSystem system_;
  WitnessMode mode_;
  std::size_t column_family_vc_;
  std::map<SignedTuple, SkolemWitness> cache_;
};

// Deduplicated witness rows produced by querying the table with the signs a
// target row induces on small column sets. provenance[i] is the first
// constraint that produced rows[i].
struct HypothesisPool {
  std::vector<std::size_t> rows;
  std::vector<SignedTuple> provenance;

  std::optional<std::size_t> position_of_row(std::size_t s_row) const;
};

// Queries the table with every column subset of size <= n, signed by p's
// bits. Every such constraint is satisfied by p's realizer, so each query
// yields a witness; with n >= the column count the pool contains the
// realizer itself.
HypothesisPool build_pool(const SetSystem& s, const TypeOverA& p,
                          SkolemTable& table, std::size_t n);

// Finds columns a_0..a_{l-1} such that the table's witness for the
// constraint they induce on p agrees with p on measure at least 2/3: takes
// a 1/3-approximation of the pairwise symmetric-difference family under mu
// and returns its support. The agreement bound is re-verified exactly;
// nullopt means the approximation search ran out of budget (retry larger).
std::optional<PointSet> agreement_tuple(const SetSystem& s,
                                        const TypeOverA& p, const Measure& mu,
                                        SkolemTable& table, std::size_t budget,
                                        std::uint64_t seed = 0);

}  // namespace vcdef

#endif  // VCDEF_SKOLEM_HPP_
