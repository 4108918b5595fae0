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

// Brute-force reference implementations used only by tests. These stay
// deliberately naive (nested loops, set-of-strings bookkeeping, no pruning)
// so they remain an independent check on the library's faster paths.

#ifndef VCDEF_TESTS_TEST_UTIL_HPP_
#define VCDEF_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vcdef/set_system.hpp"

namespace vcdef_test {

inline vcdef::SetSystem mk(const std::vector<std::string>& row_strings) {
  std::vector<vcdef::Bits> rows;
  rows.reserve(row_strings.size());
  for (const auto& r : row_strings) rows.push_back(vcdef::bits_from_string(r));
  return vcdef::SetSystem::from_rows(row_strings.front().size(),
                                     std::move(rows));
}

// All subsets of {0..n-1}, listed by increasing size then lexicographically.
inline std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

inline bool naive_shatters(const vcdef::SetSystem& s,
                           const std::vector<std::size_t>& x) {
  std::set<std::string> patterns;
  for (const auto& row : s.rows()) {
    std::string p;
    for (std::size_t i : x) p.push_back(row[i] ? '1' : '0');
    patterns.insert(p);
  }
  std::uint64_t want = 1;
  for (std::size_t i = 0; i < x.size(); ++i) want *= 2;
  return patterns.size() == want;
}

inline std::size_t naive_vc(const vcdef::SetSystem& s) {
  std::size_t best = 0;
  for (const auto& x : all_subsets(s.num_columns())) {
    if (naive_shatters(s, x)) best = std::max(best, x.size());
  }
  return best;
}

inline std::size_t naive_trace_count(const vcdef::SetSystem& s,
                                     const std::vector<std::size_t>& x) {
  std::set<std::string> patterns;
  for (const auto& row : s.rows()) {
    std::string p;
    for (std::size_t i : x) p.push_back(row[i] ? '1' : '0');
    patterns.insert(p);
  }
  return patterns.size();
}

inline vcdef::SetSystem random_system(std::size_t cols, std::size_t rows,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<vcdef::Bits> r(rows, vcdef::Bits(cols));
  for (auto& row : r) {
    for (auto& b : row) b = static_cast<std::uint8_t>(rng() & 1);
  }
  return vcdef::SetSystem::from_rows(cols, std::move(r));
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace vcdef_test

#endif  // VCDEF_TESTS_TEST_UTIL_HPP_
