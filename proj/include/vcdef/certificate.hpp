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

#ifndef VCDEF_CERTIFICATE_HPP_
#define VCDEF_CERTIFICATE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vcdef/rational.hpp"
#include "vcdef/set_system.hpp"
#include "vcdef/skolem.hpp"
#include "vcdef/teaching.hpp"

namespace vcdef {

// One committee member: a constraint that pins the member down, plus the
// full trace shared by every row satisfying the constraint. The trace is
// derivable by a row search; storing it makes evaluation search-free, and
// validate() re-derives it as a staleness check.
struct CertificateMember {
  SignedTuple tuple;
  Bits trace;
};

// Defining data for one type: m members (multiplicity expanded), each pinned
// by at most k_max literals. A column belongs to the decoded type iff
// strictly more than m/2 member traces have bit 1 there.
class Certificate {
 public:
  Certificate() = default;
  // Throws InputError on an empty member list.
  explicit Certificate(std::vector<CertificateMember> members);

  // Members from constraints alone, each trace derived by a row search.
  // Throws VerificationError when a constraint is unsatisfiable or its
  // satisfying rows disagree somewhere.
  static Certificate derive(const SetSystem& s,
                            const std::vector<SignedTuple>& tuples);

  const std::vector<CertificateMember>& members() const { return members_; }
  std::size_t m() const { return members_.size(); }
  std::size_t k_max() const { return k_max_; }

  // Re-checks every member against the system: literal columns in range and
  // trace width right (InputError), constraint satisfiable and every
  // satisfying row carrying exactly the stored trace (VerificationError).
  void validate(const SetSystem& s) const;

 private:
  std::vector<CertificateMember> members_;
  std::size_t k_max_ = 0;
};

// Majority vote over the stored member traces. No row search.
bool eval_exists(const SetSystem& s, const Certificate& cert, std::size_t a);

// The same vote re-quantified over rows: member t counts at column a only
// when every row satisfying its constraint has bit 1 there. Agrees with
// eval_exists whenever the members isolate, which validate() guarantees. A
// member no row satisfies would count at every column (a vacuous forall);
// validate() rejects such certificates upstream.
bool eval_forall(const SetSystem& s, const Certificate& cert, std::size_t a);

// eval_exists at every column.
Bits decode_bits(const SetSystem& s, const Certificate& cert);

// decode_bits as a realized type. Throws VerificationError when no row
// carries the decoded trace.
TypeOverA decode(const SetSystem& s, const Certificate& cert);

struct CompressOptions {
  // Cap for the adaptive constraint width; 0 means the column count.
  std::size_t max_n = 0;
  bool exact_lp = true;
  // Iterative solver only. Must sit strictly between 0 and 1/24 so the
  // majority margin 2/3 - tolerance - 1/8 stays above 1/2.
  Rational tolerance = Rational(1, 48);
  std::uint64_t seed = 0;
  std::size_t committee_budget = 4096;
};

struct CompressionStats {
  std::size_t n_used = 0;
  std::size_t pool_size = 0;
  Rational value;
  bool lp_exact = true;
  Rational gap;
  std::size_t m = 0;
  std::size_t k_max = 0;
};

// The whole pipeline for one realized type p: query the isolated-witness
// table with p's signs on column sets of width <= n, solve the agreement
// game between columns and the resulting pool, and once the certified value
// reaches 2/3 (minus the tolerance when the iterative solver answered) draw
// a majority committee and emit one member per committee seat, its
// constraint read off the witness's recorded isolation. The width n doubles
// from 1 up to the cap; at n = |columns| the pool contains p's realizer and
// the value is 1, so running out of widths means a bug and throws
// VerificationError loudly. The result is validated and decoded back before
// returning; pass `table` to share witnesses across types of one system and
// `stats` to observe the run.
Certificate compress_type(const SetSystem& s, const TypeOverA& p,
                          const CompressOptions& opts = {},
                          SkolemTable* table = nullptr,
                          CompressionStats* stats = nullptr);

}  // namespace vcdef

#endif  // VCDEF_CERTIFICATE_HPP_
