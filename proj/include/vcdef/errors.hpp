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

#ifndef VCDEF_ERRORS_HPP_
#define VCDEF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace vcdef {

// Malformed or out-of-contract input: a bad file, ragged rows, an index out
// of range, a precondition the caller is responsible for. The command line
// maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A constraint with no satisfying row, in a context that requires one.
class UnsatisfiableConstraint : public InputError {
 public:
  explicit UnsatisfiableConstraint(const std::string& what)
      : InputError(what) {}
};

// A produced or loaded artifact failed verification against the system it
// claims to describe. The command line maps this to exit code 1.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace vcdef

#endif  // VCDEF_ERRORS_HPP_
