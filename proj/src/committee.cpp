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

#include "vcdef/committee.hpp"

#include "vcdef/eps_approx.hpp"
#include "vcdef/errors.hpp"

namespace vcdef {

Committee build_committee(const GameMatrix& b, const MixedStrategy& nu,
                          const CommitteeOptions& opts) {
  if (nu.size() != b.num_cols()) {
    throw InputError("strategy width does not match the matrix");
  }
  const Rational required = Rational(2, 3) - opts.solver_slack;
  if (required - Rational(1, 8) <= Rational(1, 2)) {
    throw InputError("solver slack leaves no majority margin");
  }
  for (std::size_t i = 0; i < b.num_rows(); ++i) {
    Rational mass = 0;
    for (std::size_t j = 0; j < b.num_cols(); ++j) {
      if (b.at(i, j)) mass += nu.weight(j);
    }
    if (mass < required) {
      throw InputError("strategy does not certify the committee bound");
    }
  }

  std::vector<Bits> rows;
  rows.reserve(b.num_rows());
  for (std::size_t i = 0; i < b.num_rows(); ++i) rows.push_back(b.row(i));
  const SetSystem agreement_family =
      SetSystem::from_rows(b.num_cols(), std::move(rows)).canonical();

  std::size_t budget = opts.budget;
  for (int attempt = 0; attempt < opts.attempts; ++attempt, budget *= 2) {
    std::optional<Multiset> picked =
        find_approximation(agreement_family, nu, Rational(1, 8), budget,
                           opts.seed + static_cast<std::uint64_t>(attempt));
    if (!picked) continue;

    Committee committee{picked->counts(), picked->total()};
    for (std::size_t i = 0; i < b.num_rows(); ++i) {
      std::size_t agreeing = 0;
      for (const auto& [position, count] : committee.members) {
        if (b.at(i, position)) agreeing += count;
      }
      if (2 * agreeing <= committee.m) {
        throw VerificationError("committee loses the vote at a row");
      }
    }
    return committee;
  }
  throw VerificationError("no committee approximation within budget");
}

}  // namespace vcdef
