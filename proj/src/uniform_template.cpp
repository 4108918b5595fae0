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

#include "vcdef/uniform_template.hpp"

#include <utility>

#include "vcdef/errors.hpp"

namespace vcdef {
namespace {

bool majority_at(const std::vector<const CertificateMember*>& members,
                 std::size_t count, std::size_t a) {
  std::size_t votes = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const CertificateMember* member =
        t < members.size() ? members[t] : members.front();
    if (member->trace[a] != 0) ++votes;
  }
  return 2 * votes > count;
}

}  // namespace

TemplateResult make_template(const std::vector<Certificate>& certs) {
  if (certs.empty()) {
    throw InputError("a template needs at least one certificate");
  }
  const std::size_t width = certs.front().members().front().trace.size();
  for (const Certificate& cert : certs) {
    for (const CertificateMember& member : cert.members()) {
      if (member.trace.size() != width) {
        throw InputError("certificates are not from one system");
      }
    }
  }

  std::size_t j_slots = 0;
  std::size_t k_slots = 0;
  for (const Certificate& cert : certs) {
    std::size_t padded_m = cert.m() % 2 == 0 ? cert.m() + 1 : cert.m();
    if (padded_m > j_slots) j_slots = padded_m;
    if (cert.k_max() > k_slots) k_slots = cert.k_max();
  }

  TemplateResult result;
  result.shape = {j_slots, k_slots, j_slots * k_slots};
  result.entries.reserve(certs.size());
  for (const Certificate& cert : certs) {
    std::vector<const CertificateMember*> padded;
    padded.reserve(j_slots);
    for (const CertificateMember& member : cert.members()) {
      padded.push_back(&member);
    }
    if (padded.size() % 2 == 0) padded.push_back(padded.front());

    bool unanimous = true;
    for (const CertificateMember* member : padded) {
      if (member->trace != padded.front()->trace) {
        unanimous = false;
        break;
      }
    }

    TemplateEntry entry;
    entry.active_members = unanimous ? j_slots : padded.size();
    entry.slots.reserve(j_slots);
    for (std::size_t t = 0; t < j_slots; ++t) {
      const CertificateMember* member =
          t < padded.size() ? padded[t] : padded.front();
      std::vector<SignedPair> block = member->tuple.pairs();
      if (block.empty() && k_slots > 0) {
        throw InputError("a member with no literals cannot be padded");
      }
      while (block.size() < k_slots) block.push_back(block.front());
      entry.slots.push_back(std::move(block));
    }

    std::vector<const CertificateMember*> original;
    original.reserve(cert.m());
    for (const CertificateMember& member : cert.members()) {
      original.push_back(&member);
    }
    for (std::size_t a = 0; a < width; ++a) {
      if (majority_at(original, cert.m(), a) !=
          majority_at(padded, entry.active_members, a)) {
        throw VerificationError("template padding changed a decode");
      }
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

Certificate certificate_from_slots(const SetSystem& s,
                                   const TemplateEntry& entry) {
  if (entry.active_members == 0 || entry.active_members > entry.slots.size()) {
    throw InputError("entry active member count is out of range");
  }
  for (const std::vector<SignedPair>& block : entry.slots) {
    if (block.size() != entry.slots.front().size()) {
      throw InputError("template entry blocks have ragged widths");
    }
  }
  std::vector<SignedTuple> tuples;
  tuples.reserve(entry.active_members);
  for (std::size_t t = 0; t < entry.active_members; ++t) {
    tuples.push_back(SignedTuple::of(entry.slots[t]));
  }
  return Certificate::derive(s, tuples);
}

TypeCountReport count_types_check(const SetSystem& s,
                                  std::size_t parameter_length) {
  if (s.num_columns() < 2) {
    throw InputError("type counting needs at least two columns");
  }
  TypeCountReport report;
  report.distinct_rows = s.canonical().num_rows();
  report.columns = s.num_columns();
  report.parameter_length = parameter_length;
  mpz_ui_pow_ui(report.bound.get_mpz_t(), report.columns, parameter_length);
  report.rows_within_bound = Integer(report.distinct_rows) <= report.bound;

  auto [size, witness] = vc_dim_witness(s);
  report.shattered_size = size;
  report.shattered_traces = trace_count(s, witness);
  report.shattered_exact =
      Integer(report.shattered_traces) == (Integer(1) << size);
  return report;
}

}  // namespace vcdef
