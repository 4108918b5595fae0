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

#include "vcdef/measure.hpp"

#include <algorithm>
#include <map>

#include "vcdef/errors.hpp"

namespace vcdef {

Measure Measure::uniform(std::size_t n) {
  if (n == 0) throw InputError("measure needs at least one column");
  return Measure(std::vector<Rational>(n, Rational(1, n)));
}

Measure Measure::of(std::vector<Rational> weights) {
  if (weights.empty()) throw InputError("measure needs at least one column");
  Rational sum = 0;
  for (Rational& w : weights) {
    // Callers may have built weights with the non-reducing two-argument
    // constructor; comparisons below need reduced form.
    w.canonicalize();
    if (w < 0) throw InputError("measure weights must be nonnegative");
    sum += w;
  }
  if (sum != 1) {
    throw InputError("measure weights must sum to exactly 1, got " +
                     to_string(sum));
  }
  return Measure(std::move(weights));
}

Measure Measure::point_mass(std::size_t n, std::size_t column) {
  if (column >= n) throw InputError("point mass column out of range");
  std::vector<Rational> w(n, Rational(0));
  w[column] = 1;
  return Measure(std::move(w));
}

Rational Measure::mass_of_row(const Bits& row) const {
  if (row.size() != weights_.size()) {
    throw InputError("row width does not match measure size");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i]) sum += weights_[i];
  }
  return sum;
}

Multiset Multiset::of(
    std::vector<std::pair<std::size_t, std::size_t>> counts) {
  std::map<std::size_t, std::size_t> merged;
  for (const auto& [index, count] : counts) merged[index] += count;
  Multiset y;
  for (const auto& [index, count] : merged) {
    if (count == 0) continue;
    y.counts_.emplace_back(index, count);
    y.total_ += count;
  }
  if (y.total_ == 0) throw InputError("multiset must have size at least 1");
  return y;
}

Multiset Multiset::single(std::size_t index) { return of({{index, 1}}); }

std::vector<std::size_t> Multiset::support() const {
  std::vector<std::size_t> s;
  s.reserve(counts_.size());
  for (const auto& [index, count] : counts_) s.push_back(index);
  return s;
}

std::size_t Multiset::hits_in_row(const Bits& row) const {
  std::size_t hits = 0;
  for (const auto& [index, count] : counts_) {
    if (index < row.size() && row[index]) hits += count;
  }
  return hits;
}

void Multiset::validate_against(std::size_t num_columns) const {
  for (const auto& [index, count] : counts_) {
    if (index >= num_columns) {
      throw InputError("multiset index " + std::to_string(index) +
                       " out of range for " + std::to_string(num_columns) +
                       " columns");
    }
  }
}

}  // namespace vcdef
