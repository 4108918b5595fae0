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

#include "vcdef/set_system.hpp"

#include <algorithm>
#include <unordered_set>

#include "vcdef/errors.hpp"

namespace vcdef {
namespace {

bool RowsStrictlyIncreasing(const std::vector<Bits>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i - 1] < rows[i])) return false;
  }
  return true;
}

// Trace of a row on x, packed so that numeric order equals lexicographic
// order by column position: x[0] lands in the most significant bit.
std::uint64_t TraceMask(const Bits& row, const std::vector<std::size_t>& x) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mask = (mask << 1) | row[x[i]];
  }
  return mask;
}

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t v : b) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::string bits_to_string(const Bits& bits) {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i] = '1';
  }
  return out;
}

Bits bits_from_string(const std::string& text) {
  Bits out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '0') {
      out[i] = 0;
    } else if (text[i] == '1') {
      out[i] = 1;
    } else {
      throw InputError("bit string may contain only 0 and 1: '" + text + "'");
    }
  }
  return out;
}

SetSystem::SetSystem(std::vector<std::string> columns, std::vector<Bits> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
  if (columns_.empty()) throw InputError("set system needs at least 1 column");
  if (rows_.empty()) throw InputError("set system needs at least 1 row");
  for (const Bits& r : rows_) {
    if (r.size() != columns_.size()) {
      throw InputError("ragged row: got " + std::to_string(r.size()) +
                       " bits, expected " + std::to_string(columns_.size()));
    }
    for (std::uint8_t v : r) {
      if (v > 1) throw InputError("row entries must be 0 or 1");
    }
  }
  canonical_ = RowsStrictlyIncreasing(rows_);
}

SetSystem SetSystem::from_rows(std::size_t num_columns,
                               std::vector<Bits> rows) {
  std::vector<std::string> columns(num_columns);
  for (std::size_t i = 0; i < num_columns; ++i) {
    columns[i] = "c" + std::to_string(i);
  }
  return SetSystem(std::move(columns), std::move(rows));
}

const Bits& SetSystem::row(std::size_t i) const {
  if (i >= rows_.size()) {
    throw InputError("row index " + std::to_string(i) + " out of range");
  }
  return rows_[i];
}

bool SetSystem::bit(std::size_t row_index, std::size_t col) const {
  if (col >= columns_.size()) {
    throw InputError("column index " + std::to_string(col) + " out of range");
  }
  return row(row_index)[col] != 0;
}

SetSystem SetSystem::canonical() const {
  if (canonical_) return *this;
  std::vector<Bits> sorted = rows_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return SetSystem(columns_, std::move(sorted));
}

std::optional<std::size_t> SetSystem::find_row(const Bits& bits) const {
  if (canonical_) {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), bits);
    if (it != rows_.end() && *it == bits) return it - rows_.begin();
    return std::nullopt;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == bits) return i;
  }
  return std::nullopt;
}

PointSet PointSet::of(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw InputError("point set has duplicate indices");
  }
  PointSet p;
  p.indices_ = std::move(indices);
  return p;
}

bool PointSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

PointSet PointSet::united_with(const PointSet& other) const {
  std::vector<std::size_t> merged;
  merged.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(merged));
  PointSet p;
  p.indices_ = std::move(merged);
  return p;
}

void PointSet::validate_against(std::size_t num_columns) const {
  for (std::size_t i : indices_) {
    if (i >= num_columns) {
      throw InputError("point " + std::to_string(i) + " out of range for " +
                       std::to_string(num_columns) + " columns");
    }
  }
}

TypeOverA TypeOverA::of(const SetSystem& s, std::size_t row) {
  return TypeOverA{s.row(row), row};
}

TypeOverA TypeOverA::of(const SetSystem& s, const Bits& bits) {
  auto index = s.find_row(bits);
  if (!index.has_value()) {
    throw InputError("type " + bits_to_string(bits) +
                     " is not realized by any row");
  }
  return TypeOverA{bits, *index};
}

bool shatters(const SetSystem& s, const PointSet& x) {
  x.validate_against(s.num_columns());
  const std::size_t d = x.size();
  if (d == 0) return true;
  // A shattered d-set needs 2^d distinct traces, each realized by a row.
  if (d >= 64 || s.num_rows() < (std::uint64_t{1} << d)) return false;
  const std::uint64_t want = std::uint64_t{1} << d;
  std::vector<bool> seen(want, false);
  std::uint64_t found = 0;
  for (const Bits& r : s.rows()) {
    const std::uint64_t m = TraceMask(r, x.indices());
    if (!seen[m]) {
      seen[m] = true;
      if (++found == want) return true;
    }
  }
  return false;
}

std::pair<std::size_t, PointSet> vc_dim_witness(const SetSystem& s) {
  const SetSystem z = s.canonical();
  const std::size_t cols = z.num_columns();
  // 2^d distinct traces require 2^d distinct rows.
  std::size_t max_d = 0;
  while ((std::uint64_t{1} << (max_d + 1)) <= z.num_rows() && max_d + 1 <= cols) {
    ++max_d;
  }
  std::vector<std::vector<std::size_t>> level = {{}};  // shattered d-subsets
  PointSet witness;  // empty set, always shattered
  std::size_t d = 0;
  while (d < max_d) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& x : level) {
      const std::size_t start = x.empty() ? 0 : x.back() + 1;
      for (std::size_t j = start; j < cols; ++j) {
        std::vector<std::size_t> y = x;
        y.push_back(j);
        if (shatters(z, PointSet::of(y))) next.push_back(std::move(y));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
    witness = PointSet::of(level.front());
    ++d;
  }
  return {d, witness};
}

std::size_t vc_dim(const SetSystem& s) { return vc_dim_witness(s).first; }

SetSystem dual(const SetSystem& s) {
  const SetSystem z = s.canonical();
  std::vector<std::string> columns(z.num_rows());
  for (std::size_t i = 0; i < z.num_rows(); ++i) {
    columns[i] = "r" + std::to_string(i);
  }
  std::vector<Bits> rows(z.num_columns(), Bits(z.num_rows()));
  for (std::size_t j = 0; j < z.num_columns(); ++j) {
    for (std::size_t i = 0; i < z.num_rows(); ++i) {
      rows[j][i] = z.row(i)[j];
    }
  }
  return SetSystem(std::move(columns), std::move(rows)).canonical();
}

std::size_t trace_count(const SetSystem& s, const PointSet& x) {
  x.validate_against(s.num_columns());
  if (x.empty()) return 1;
  if (x.size() < 64) {
    std::vector<std::uint64_t> masks;
    masks.reserve(s.num_rows());
    for (const Bits& r : s.rows()) masks.push_back(TraceMask(r, x.indices()));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks.size();
  }
  std::vector<Bits> traces;
  traces.reserve(s.num_rows());
  for (const Bits& r : s.rows()) {
    Bits t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) t[i] = r[x[i]];
    traces.push_back(std::move(t));
  }
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  return traces.size();
}

SetSystem symmetric_difference_family(const SetSystem& s) {
  const SetSystem z = s.canonical();
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> rows;
  for (std::size_t i = 0; i < z.num_rows(); ++i) {
    for (std::size_t j = i; j < z.num_rows(); ++j) {
      Bits d(z.num_columns());
      const Bits& a = z.row(i);
      const Bits& b = z.row(j);
      for (std::size_t c = 0; c < d.size(); ++c) d[c] = a[c] ^ b[c];
      if (seen.insert(d).second) rows.push_back(std::move(d));
    }
  }
  return SetSystem(z.columns(), std::move(rows)).canonical();
}

SetSystem restrict(const SetSystem& s, const PointSet& x) {
  if (x.empty()) throw InputError("restriction needs a nonempty point set");
  x.validate_against(s.num_columns());
  std::vector<std::string> columns;
  columns.reserve(x.size());
  for (std::size_t i : x.indices()) columns.push_back(s.columns()[i]);
  std::vector<Bits> rows;
  rows.reserve(s.num_rows());
  for (const Bits& r : s.rows()) {
    Bits t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) t[i] = r[x[i]];
    rows.push_back(std::move(t));
  }
  return SetSystem(std::move(columns), std::move(rows)).canonical();
}

}  // namespace vcdef
