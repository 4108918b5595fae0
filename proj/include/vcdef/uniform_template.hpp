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

#ifndef VCDEF_UNIFORM_TEMPLATE_HPP_
#define VCDEF_UNIFORM_TEMPLATE_HPP_

#include <cstddef>
#include <vector>

#include "vcdef/certificate.hpp"
#include "vcdef/rational.hpp"
#include "vcdef/set_system.hpp"
#include "vcdef/teaching.hpp"

namespace vcdef {

// One parameter shape serving every type of a system: j_slots member blocks
// of k_slots literals each, parameter_length = j_slots * k_slots slots in
// all.
struct UniformTemplate {
  std::size_t j_slots = 0;
  std::size_t k_slots = 0;
  std::size_t parameter_length = 0;
};

// One type's parameters poured into the template shape: j_slots blocks of
// exactly k_slots literals. The first active_members blocks are live; the
// rest repeat the first block and are skipped at evaluation. Within a
// block, literals past the member's own repeat its first literal, which a
// conjunction absorbs.
struct TemplateEntry {
  std::vector<std::vector<SignedPair>> slots;
  std::size_t active_members = 0;
};

struct TemplateResult {
  UniformTemplate shape;
  std::vector<TemplateEntry> entries;
};

// Codes certificates from one system into a single shape. Member counts are
// first padded to odd by repeating the first member (safe because every
// column's vote is a strict majority, so one doubled voice never flips it),
// then j_slots = the largest padded count and k_slots = the largest member
// width. A certificate whose members all share one trace is topped up to
// j_slots outright; others keep their own count as active_members. The
// columnwise decode of every padded entry is checked against its source
// certificate before returning. Throws InputError on an empty list or on
// certificates of differing column width.
TemplateResult make_template(const std::vector<Certificate>& certs);

// Rebuilds the certificate an entry encodes: the live blocks, each
// collapsed back into a canonical tuple, traces re-derived from the system.
Certificate certificate_from_slots(const SetSystem& s,
                                   const TemplateEntry& entry);

// Both sides of the type-counting argument on one system.
struct TypeCountReport {
  std::size_t distinct_rows = 0;
  std::size_t columns = 0;
  std::size_t parameter_length = 0;
  Integer bound;  // columns^parameter_length
  bool rows_within_bound = false;
  std::size_t shattered_size = 0;
  std::size_t shattered_traces = 0;
  bool shattered_exact = false;  // traces on the witness == 2^size
};

// Checks distinct rows <= columns^parameter_length and, on a maximum
// shattered set, that the trace count hits 2^size exactly. Needs at least
// two columns.
TypeCountReport count_types_check(const SetSystem& s,
                                  std::size_t parameter_length);

}  // namespace vcdef

#endif  // VCDEF_UNIFORM_TEMPLATE_HPP_
