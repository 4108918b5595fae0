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

#ifndef VCDEF_EPS_APPROX_HPP_
#define VCDEF_EPS_APPROX_HPP_

#include <cstdint>
#include <optional>

#include "vcdef/measure.hpp"
#include "vcdef/rational.hpp"
#include "vcdef/set_system.hpp"

namespace vcdef {

// Worst row deviation between the measure and the multiset's empirical
// frequency: max over rows s of |mu(s) - hits(y, s) / |y||. Exact.
Rational approx_error(const SetSystem& s, const Measure& mu,
                      const Multiset& y);

struct ApproximationSearch {
  std::size_t budget = 1024;  // largest multiset size considered
  std::uint64_t seed = 0;
  // Sizes are tried exhaustively (all multisets, lexicographic) while the
  // cumulative candidate count stays below this cutoff; after that the
  // search samples from mu with doubling sizes up to the budget.
  std::uint64_t exhaustive_cutoff = 2'000'000;
  std::size_t trials_per_size = 128;
};

// First multiset whose exact error is at most eps, or nullopt when the
// search exhausted its budget. A nullopt never claims nonexistence. Every
// returned multiset was re-verified with approx_error before returning.
std::optional<Multiset> find_approximation(const SetSystem& s,
                                           const Measure& mu,
                                           const Rational& eps,
                                           const ApproximationSearch& opts);
std::optional<Multiset> find_approximation(const SetSystem& s,
                                           const Measure& mu,
                                           const Rational& eps,
                                           std::size_t budget,
                                           std::uint64_t seed);

// Smallest multiset size admitting error at most eps, by exhaustive
// enumeration per size. Throws InputError when a size's candidate count
// exceeds the cutoff before an answer is found. Guaranteed to terminate
// otherwise: the measure's common denominator gives an exact multiset.
std::size_t min_approximation_size(const SetSystem& s, const Measure& mu,
                                   const Rational& eps,
                                   std::uint64_t cutoff = 2'000'000);

}  // namespace vcdef

#endif  // VCDEF_EPS_APPROX_HPP_
