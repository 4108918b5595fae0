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

#ifndef VCDEF_RATIONAL_HPP_
#define VCDEF_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

namespace vcdef {

// Every quantity that must be exact (measures, empirical frequencies, game
// values, strategy weights, margins) is an arbitrary-precision rational.
// Floating point appears only inside randomized search heuristics and never
// in a verified result.
using Rational = mpq_class;
using Integer = mpz_class;

// Formats as "p/q" with the denominator always present: "2/3", "1/1", "0/1".
std::string to_string(const Rational& q);

// Accepts "p" or "p/q", with an optional leading minus sign. Throws
// InputError on malformed text or a zero denominator.
Rational rational_from_string(const std::string& text);

Rational rational_abs(const Rational& q);

// num/den in lowest terms. The two-argument mpq_class constructor does not
// reduce, and comparison operators require reduced operands, so every ratio
// built from separate numerator and denominator goes through here.
Rational ratio(const Integer& num, const Integer& den);

}  // namespace vcdef

#endif  // VCDEF_RATIONAL_HPP_
