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

#ifndef VCDEF_MEASURE_HPP_
#define VCDEF_MEASURE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "vcdef/rational.hpp"
#include "vcdef/set_system.hpp"

namespace vcdef {

// A probability measure on the column universe: nonnegative rational weights
// summing to exactly 1.
class Measure {
 public:
  static Measure uniform(std::size_t n);
  static Measure of(std::vector<Rational> weights);
  static Measure point_mass(std::size_t n, std::size_t column);

  std::size_t size() const { return weights_.size(); }
  const Rational& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }

  // Total mass of the set a row describes: the sum over its 1 bits.
  Rational mass_of_row(const Bits& row) const;

 private:
  explicit Measure(std::vector<Rational> weights)
      : weights_(std::move(weights)) {}
  std::vector<Rational> weights_;
};

// A finite multiset of column indices: (index, count) pairs sorted by index,
// counts positive, total size at least 1.
class Multiset {
 public:
  // Merges duplicate indices, drops zero counts.
  static Multiset of(std::vector<std::pair<std::size_t, std::size_t>> counts);
  static Multiset single(std::size_t index);

  std::size_t total() const { return total_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& counts() const {
    return counts_;
  }
  std::vector<std::size_t> support() const;

  // Elements of the multiset that land inside the row's set, counted with
  // multiplicity.
  std::size_t hits_in_row(const Bits& row) const;

  void validate_against(std::size_t num_columns) const;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> counts_;
  std::size_t total_ = 0;
};

}  // namespace vcdef

#endif  // VCDEF_MEASURE_HPP_
