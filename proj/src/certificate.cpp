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

#include "vcdef/certificate.hpp"

#include <optional>
#include <string>
#include <utility>

#include "vcdef/committee.hpp"
#include "vcdef/errors.hpp"
#include "vcdef/game.hpp"

namespace vcdef {
namespace {

// The one full trace carried by every row satisfying `tuple`, or an
// explanation of why there is no such trace.
const Bits& isolated_trace(const SetSystem& s, const SignedTuple& tuple) {
  tuple.validate_against(s.num_columns());
  const Bits* trace = nullptr;
  for (const Bits& row : s.rows()) {
    if (!tuple.satisfied_by(row)) continue;
    if (trace != nullptr && *trace != row) {
      throw VerificationError(
          "certificate member does not isolate: satisfying rows disagree");
    }
    trace = &row;
  }
  if (trace == nullptr) {
    throw VerificationError("certificate member constraint is unsatisfiable");
  }
  return *trace;
}

}  // namespace

Certificate::Certificate(std::vector<CertificateMember> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw InputError("a certificate needs at least one member");
  }
  for (const CertificateMember& member : members_) {
    if (member.tuple.size() > k_max_) k_max_ = member.tuple.size();
  }
}

Certificate Certificate::derive(const SetSystem& s,
                                const std::vector<SignedTuple>& tuples) {
  std::vector<CertificateMember> members;
  members.reserve(tuples.size());
  for (const SignedTuple& tuple : tuples) {
    members.push_back({tuple, isolated_trace(s, tuple)});
  }
  return Certificate(std::move(members));
}

void Certificate::validate(const SetSystem& s) const {
  if (members_.empty()) {
    throw InputError("a certificate needs at least one member");
  }
  for (const CertificateMember& member : members_) {
    if (member.trace.size() != s.num_columns()) {
      throw InputError("certificate trace width does not match the system");
    }
    if (isolated_trace(s, member.tuple) != member.trace) {
      throw VerificationError(
          "stored member trace differs from the isolated one");
    }
  }
}

bool eval_exists(const SetSystem& s, const Certificate& cert, std::size_t a) {
  if (a >= s.num_columns()) {
    throw InputError("column index out of range");
  }
  std::size_t votes = 0;
  for (const CertificateMember& member : cert.members()) {
    if (member.trace.size() != s.num_columns()) {
      throw InputError("certificate trace width does not match the system");
    }
    if (member.trace[a] != 0) ++votes;
  }
  return 2 * votes > cert.m();
}

bool eval_forall(const SetSystem& s, const Certificate& cert, std::size_t a) {
  if (a >= s.num_columns()) {
    throw InputError("column index out of range");
  }
  std::size_t votes = 0;
  for (const CertificateMember& member : cert.members()) {
    member.tuple.validate_against(s.num_columns());
    bool always_one = true;
    for (const Bits& row : s.rows()) {
      if (member.tuple.satisfied_by(row) && row[a] == 0) {
        always_one = false;
        break;
      }
    }
    if (always_one) ++votes;
  }
  return 2 * votes > cert.m();
}

Bits decode_bits(const SetSystem& s, const Certificate& cert) {
  Bits bits(s.num_columns(), 0);
  for (std::size_t a = 0; a < s.num_columns(); ++a) {
    bits[a] = eval_exists(s, cert, a) ? 1 : 0;
  }
  return bits;
}

TypeOverA decode(const SetSystem& s, const Certificate& cert) {
  Bits bits = decode_bits(s, cert);
  std::optional<std::size_t> row = s.find_row(bits);
  if (!row) {
    throw VerificationError("decoded trace " + bits_to_string(bits) +
                            " is not realized by any row");
  }
  return TypeOverA::of(s, *row);
}

Certificate compress_type(const SetSystem& s, const TypeOverA& p,
                          const CompressOptions& opts, SkolemTable* table,
                          CompressionStats* stats) {
  if (s.num_columns() < 2) {
    throw InputError("compression needs at least two columns");
  }
  if (!s.is_canonical()) {
    throw InputError("compression needs a canonical system");
  }
  if (!s.find_row(p.bits)) {
    throw InputError("type is not realized in the system");
  }
  if (opts.tolerance <= 0 || opts.tolerance >= Rational(1, 24)) {
    throw InputError(
        "solver tolerance must sit strictly between 0 and 1/24 to leave a "
        "majority margin");
  }

  std::optional<SkolemTable> local;
  if (table == nullptr) {
    local.emplace(s, WitnessMode::kIsolatedWitness);
    table = &*local;
  } else if (table->mode() != WitnessMode::kIsolatedWitness) {
    throw InputError("compression needs an isolated-witness table");
  }

  std::size_t cap = s.num_columns();
  if (opts.max_n != 0 && opts.max_n < cap) cap = opts.max_n;
  std::vector<std::size_t> widths;
  for (std::size_t n = 1; n < cap; n *= 2) widths.push_back(n);
  widths.push_back(cap);

  const Rational target(2, 3);
  for (std::size_t n : widths) {
    HypothesisPool pool = build_pool(s, p, *table, n);
    GameMatrix b = GameMatrix::agreement(s, p, pool);
    SolverOptions solver;
    solver.force_approx = !opts.exact_lp;
    solver.tolerance = opts.tolerance;
    GameSolution sol = solve_game(b, solver);
    Rational threshold = sol.exact ? target : target - opts.tolerance;
    if (sol.value < threshold) continue;

    CommitteeOptions copts;
    copts.budget = opts.committee_budget;
    copts.seed = opts.seed;
    if (!sol.exact && sol.value < target) copts.solver_slack = target - sol.value;
    Committee committee = build_committee(b, sol.nu, copts);

    std::vector<CertificateMember> members;
    members.reserve(committee.m);
    for (const auto& [pos, count] : committee.members) {
      const SignedTuple& chi = pool.provenance[pos];
      const SkolemWitness& witness = table->witness(chi);
      if (!witness.satisfiable || !witness.isolation ||
          witness.row != pool.rows[pos]) {
        throw VerificationError("witness table no longer matches the pool");
      }
      const Bits& bits = s.row(witness.row);
      SignedTuple tuple = induced_signs(*witness.isolation, bits);
      for (std::size_t c = 0; c < count; ++c) members.push_back({tuple, bits});
    }

    Certificate cert(std::move(members));
    cert.validate(s);
    if (decode_bits(s, cert) != p.bits) {
      throw VerificationError(
          "certificate decodes to a different type than it was built for");
    }

    if (stats != nullptr) {
      stats->n_used = n;
      stats->pool_size = pool.rows.size();
      stats->value = sol.value;
      stats->lp_exact = sol.exact;
      stats->gap = sol.gap;
      stats->m = cert.m();
      stats->k_max = cert.k_max();
    }
    return cert;
  }

  throw VerificationError(
      "no constraint width up to " + std::to_string(cap) +
      " reached game value 2/3; at full width the pool contains the "
      "realizer, so this indicates a solver or pool bug");
}

}  // namespace vcdef
