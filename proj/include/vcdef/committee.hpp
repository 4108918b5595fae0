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

#ifndef VCDEF_COMMITTEE_HPP_
#define VCDEF_COMMITTEE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "vcdef/game.hpp"
#include "vcdef/rational.hpp"

namespace vcdef {

// A multiset of hypotheses that out-votes every single column: for each
// matrix row, strictly more than half of the m members (with multiplicity)
// sit in that row's agreement set.
struct Committee {
  // (pool position, count), positions strictly increasing.
  std::vector<std::pair<std::size_t, std::size_t>> members;
  std::size_t m = 0;
};

struct CommitteeOptions {
  std::size_t budget = 4096;
  std::uint64_t seed = 0;
  // Tolerance the game solution was certified under: 0 for the exact
  // solver. The majority margin 2/3 - slack - 1/8 must stay above 1/2.
  Rational solver_slack = Rational(0);
  int attempts = 6;
};

// Draws a committee by 1/8-approximating the family of the matrix's
// agreement rows under nu (approximating a family and its complements is
// the same thing, so matching the rows matches membership as well). With
// min_i (B nu)_i >= 2/3 - slack each agreement set has nu-mass >= 2/3 -
// slack, so its committee frequency is at least 2/3 - slack - 1/8 > 1/2.
// The strict majority at every matrix row is verified exactly before
// returning. Search failures retry with a doubled budget.
Committee build_committee(const GameMatrix& b, const MixedStrategy& nu,
                          const CommitteeOptions& opts = {});

}  // namespace vcdef

#endif  // VCDEF_COMMITTEE_HPP_
