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

#ifndef VCDEF_CORPUS_HPP_
#define VCDEF_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vcdef/set_system.hpp"

namespace vcdef {

enum class FamilyKind {
  kPowerset,       // powerset(n): all subsets of n points
  kThresholds,     // thresholds(n): the n+1 prefixes of n points
  kIntervals,      // intervals(n): all intervals over n points
  kIntervalUnions, // k-interval-unions(n, k): at most k intervals
  kHalfplaneGrid,  // halfplane-grid(w, h): halfplane cuts of a grid
  kModClasses,     // mod-classes(n, m): residue classes mod 1..m
  kRandom,         // random(cols, rows, seed): fair coin cells
};

// A deterministic recipe for one benchmark system, written
// "kind(p1,...,pk)", e.g. "thresholds(6)" or "random(8,30,101)".
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPowerset;
  std::vector<std::uint64_t> params;

  // Accepts the names above plus "interval-unions" as a shorthand.
  // Whitespace around tokens is fine. Wrong arity is an InputError.
  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

// Builds the spec's system in canonical form. Identical specs give
// bit-identical systems. Parameters are range-checked: every family is
// capped at 14 columns and 1024 generated rows.
SetSystem generate(const FamilySpec& spec);

// The benchmark suite used by the batch runner and the acceptance checks:
// 16 systems, at most 14 columns and 256 distinct rows each.
std::vector<FamilySpec> standard_corpus();

}  // namespace vcdef

#endif  // VCDEF_CORPUS_HPP_
