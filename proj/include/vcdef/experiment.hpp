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

#ifndef VCDEF_EXPERIMENT_HPP_
#define VCDEF_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vcdef/certificate.hpp"
#include "vcdef/corpus.hpp"
#include "vcdef/rational.hpp"
#include "vcdef/set_system.hpp"

namespace vcdef {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<CheckLine>& checks);

// The verification suite for one certificate: stored traces re-derived and
// isolation re-checked, the two evaluation semantics compared on every
// column, a strict majority confirmed at every column, the decoded trace
// looked up among the rows, and a comparison against the expected type when
// one is given. Each check runs even if an earlier one failed.
std::vector<CheckLine> verify_certificate(const SetSystem& s,
                                          const Certificate& cert,
                                          const Bits* expected = nullptr);

// One CSV line of the batch runner: per-type maxima of the pipeline sizes,
// the minimum game value over the system's types, the template width, and
// a pass/fail verdict carrying the first failure's reason.
struct ExperimentRecord {
  std::string family;
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::size_t vc = 0;
  std::size_t dual_vc = 0;
  std::size_t n_used = 0;
  std::size_t pool_size = 0;
  Rational game_value;
  std::size_t m = 0;
  std::size_t k_max = 0;
  std::size_t parameter_length = 0;
  std::uint64_t runtime_ms = 0;
  std::string verification;

  friend bool operator==(const ExperimentRecord& a,
                         const ExperimentRecord& b) = default;
};

extern const char kExperimentCsvHeader[];

// RFC-style CSV: fields containing commas, quotes, or line breaks are
// quoted, inner quotes doubled. Rationals print exactly as "p/q".
std::string records_to_csv(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> records_from_csv(const std::string& csv);

struct ExperimentOptions {
  CompressOptions compress;
  // Off by default so two identical runs write identical bytes; when on,
  // runtime_ms is the wall time spent on each system.
  bool timing = false;
};

// Runs the whole pipeline on every realized type of every spec'd system,
// with one witness table shared per system, and verifies each certificate,
// the template roundtrip, and the type-counting bound. A failure inside one
// instance is recorded in its verdict and never aborts the batch; the
// output order is the input order.
std::vector<ExperimentRecord> run_experiment(
    const std::vector<FamilySpec>& specs, const ExperimentOptions& opts = {});

}  // namespace vcdef

#endif  // VCDEF_EXPERIMENT_HPP_
