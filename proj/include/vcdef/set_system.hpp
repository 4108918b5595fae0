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

#ifndef VCDEF_SET_SYSTEM_HPP_
#define VCDEF_SET_SYSTEM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vcdef {

// One row of a system: the characteristic vector of a set over the column
// universe. Rows order lexicographically with 0 < 1, which is the order the
// canonical form uses.
using Bits = std::vector<std::uint8_t>;

std::string bits_to_string(const Bits& bits);
Bits bits_from_string(const std::string& text);

// A finite set system: a 0/1 matrix. Columns are the universe, each row is
// the characteristic vector of one member set. Always at least one row and
// one column. Duplicate rows are representable; the canonical form sorts
// rows lexicographically and removes duplicates.
class SetSystem {
 public:
  SetSystem(std::vector<std::string> columns, std::vector<Bits> rows);

  // Labels columns "c0", "c1", ...
  static SetSystem from_rows(std::size_t num_columns, std::vector<Bits> rows);

  std::size_t num_columns() const { return columns_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<Bits>& rows() const { return rows_; }
  const Bits& row(std::size_t i) const;
  bool bit(std::size_t row, std::size_t col) const;

  bool is_canonical() const { return canonical_; }
  SetSystem canonical() const;

  // Index of the row with exactly these bits, if present. On canonical
  // systems this is a binary search.
  std::optional<std::size_t> find_row(const Bits& bits) const;

 private:
  std::vector<std::string> columns_;
  std::vector<Bits> rows_;
  bool canonical_;
};

// A subset of the column universe: strictly increasing indices. Range
// checking against a concrete system happens at the operation that uses the
// set, since a PointSet alone does not know its ambient width.
class PointSet {
 public:
  PointSet() = default;

  // Sorts the indices; rejects duplicates.
  static PointSet of(std::vector<std::size_t> indices);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  bool contains(std::size_t index) const;

  PointSet united_with(const PointSet& other) const;

  // Throws InputError when any index is out of range.
  void validate_against(std::size_t num_columns) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.indices_ == b.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
};

// A complete row trace together with a row index realizing it.
struct TypeOverA {
  Bits bits;
  std::size_t realizer;

  static TypeOverA of(const SetSystem& s, std::size_t row);
  // Throws InputError when no row has these bits.
  static TypeOverA of(const SetSystem& s, const Bits& bits);
};

// True when every 0/1 pattern on x is realized by some row trace. The empty
// set is always shattered.
bool shatters(const SetSystem& s, const PointSet& x);

// Largest size of a shattered column subset. Exhaustive level-by-level
// search: a set can only be shattered if the prefix obtained by dropping its
// largest element is, so each level extends the survivors of the previous
// one.
std::size_t vc_dim(const SetSystem& s);

// Same search, also returning one shattered set of maximum size.
std::pair<std::size_t, PointSet> vc_dim_witness(const SetSystem& s);

// Transpose of the canonical form, canonicalized again: universe = rows of
// s, member sets = columns of s. Column labels name the source rows.
SetSystem dual(const SetSystem& s);

// Number of distinct row traces on x.
std::size_t trace_count(const SetSystem& s, const PointSet& x);

// All pairwise symmetric differences of rows (including a row with itself,
// so the empty row is always present), canonicalized, same columns.
SetSystem symmetric_difference_family(const SetSystem& s);

// Projection to a nonempty column subset, canonicalized (duplicate traces
// merge). Column labels carry over.
SetSystem restrict(const SetSystem& s, const PointSet& x);

}  // namespace vcdef

#endif  // VCDEF_SET_SYSTEM_HPP_
