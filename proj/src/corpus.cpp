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

#include "vcdef/corpus.hpp"

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "vcdef/errors.hpp"

namespace vcdef {
namespace {

struct KindName {
  FamilyKind kind;
  const char* name;
  std::size_t arity;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::kPowerset, "powerset", 1},
    {FamilyKind::kThresholds, "thresholds", 1},
    {FamilyKind::kIntervals, "intervals", 1},
    {FamilyKind::kIntervalUnions, "k-interval-unions", 2},
    {FamilyKind::kHalfplaneGrid, "halfplane-grid", 2},
    {FamilyKind::kModClasses, "mod-classes", 2},
    {FamilyKind::kRandom, "random", 3},
};

const KindName& kind_entry(FamilyKind kind) {
  for (const KindName& entry : kKindNames) {
    if (entry.kind == kind) return entry;
  }
  throw InputError("unknown family kind");
}

std::string trimmed(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first == std::string::npos) return "";
  return text.substr(first, last - first + 1);
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw InputError("family parameter out of range: " + what);
}

SetSystem from_row_set(std::size_t columns, const std::set<Bits>& rows) {
  std::vector<Bits> out(rows.begin(), rows.end());
  return SetSystem::from_rows(columns, std::move(out)).canonical();
}

SetSystem gen_powerset(std::size_t n) {
  require_range(n >= 1 && n <= 10, "powerset needs 1 <= n <= 10");
  std::vector<Bits> rows;
  rows.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Bits r(n, 0);
    for (std::size_t j = 0; j < n; ++j) r[j] = (mask >> j) & 1;
    rows.push_back(std::move(r));
  }
  return SetSystem::from_rows(n, std::move(rows)).canonical();
}

SetSystem gen_thresholds(std::size_t n) {
  require_range(n >= 1 && n <= 14, "thresholds needs 1 <= n <= 14");
  std::vector<Bits> rows;
  for (std::size_t t = 0; t <= n; ++t) {
    Bits r(n, 0);
    for (std::size_t j = 0; j < t; ++j) r[j] = 1;
    rows.push_back(std::move(r));
  }
  return SetSystem::from_rows(n, std::move(rows)).canonical();
}

SetSystem gen_intervals(std::size_t n) {
  require_range(n >= 1 && n <= 14, "intervals needs 1 <= n <= 14");
  std::set<Bits> rows;
  rows.insert(Bits(n, 0));
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = lo + 1; hi <= n; ++hi) {
      Bits r(n, 0);
      for (std::size_t j = lo; j < hi; ++j) r[j] = 1;
      rows.insert(std::move(r));
    }
  }
  return from_row_set(n, rows);
}

std::size_t block_count(std::uint32_t mask, std::size_t n) {
  std::size_t blocks = 0;
  bool inside = false;
  for (std::size_t j = 0; j < n; ++j) {
    bool one = (mask >> j) & 1;
    if (one && !inside) ++blocks;
    inside = one;
  }
  return blocks;
}

SetSystem gen_interval_unions(std::size_t n, std::size_t k) {
  require_range(n >= 2 && n <= 14, "k-interval-unions needs 2 <= n <= 14");
  require_range(k >= 1 && k <= 3, "k-interval-unions needs 1 <= k <= 3");
  std::vector<Bits> rows;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (block_count(mask, n) > k) continue;
    Bits r(n, 0);
    for (std::size_t j = 0; j < n; ++j) r[j] = (mask >> j) & 1;
    rows.push_back(std::move(r));
  }
  if (rows.size() > 1024) {
    throw InputError("k-interval-unions parameters generate too many rows");
  }
  return SetSystem::from_rows(n, std::move(rows)).canonical();
}

// Enumerates every halfplane pattern exactly. Any halfplane can be
// translated until its boundary touches a point and then rotated about that
// point until it touches a second without the pattern changing, so every
// pattern arises from a line through two grid points: the points strictly
// on one side, plus a prefix or suffix of the collinear points in their
// order along the line (tilting the boundary off the line keeps exactly
// such a run on board).
SetSystem gen_halfplane_grid(std::size_t w, std::size_t h) {
  require_range(w >= 1 && h >= 1, "halfplane-grid needs positive sides");
  require_range(w * h <= 14, "halfplane-grid needs at most 14 points");
  const std::size_t count = w * h;
  std::vector<std::pair<long, long>> pts;
  pts.reserve(count);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      pts.emplace_back(static_cast<long>(x), static_cast<long>(y));
    }
  }

  std::set<Bits> rows;
  rows.insert(Bits(count, 0));
  rows.insert(Bits(count, 1));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      long dx = pts[j].first - pts[i].first;
      long dy = pts[j].second - pts[i].second;
      long a = -dy;
      long b = dx;
      long c = a * pts[i].first + b * pts[i].second;

      std::vector<std::size_t> on;
      Bits neg(count, 0);
      Bits pos(count, 0);
      for (std::size_t p = 0; p < count; ++p) {
        long side = a * pts[p].first + b * pts[p].second - c;
        if (side < 0) {
          neg[p] = 1;
        } else if (side > 0) {
          pos[p] = 1;
        } else {
          on.push_back(p);
        }
      }
      std::sort(on.begin(), on.end(), [&](std::size_t p, std::size_t q) {
        long tp = dx * pts[p].first + dy * pts[p].second;
        long tq = dx * pts[q].first + dy * pts[q].second;
        return tp < tq;
      });

      for (const Bits& base : {neg, pos}) {
        Bits prefix = base;
        rows.insert(prefix);
        for (std::size_t p : on) {
          prefix[p] = 1;
          rows.insert(prefix);
        }
        Bits suffix = base;
        for (auto it = on.rbegin(); it != on.rend(); ++it) {
          suffix[*it] = 1;
          rows.insert(suffix);
        }
      }
    }
  }
  return from_row_set(count, rows);
}

SetSystem gen_mod_classes(std::size_t n, std::size_t m) {
  require_range(n >= 1 && n <= 14, "mod-classes needs 1 <= n <= 14");
  require_range(m >= 1 && m <= n, "mod-classes needs 1 <= m <= n");
  std::set<Bits> rows;
  for (std::size_t q = 1; q <= m; ++q) {
    for (std::size_t r = 0; r < q; ++r) {
      Bits row(n, 0);
      for (std::size_t i = 0; i < n; ++i) row[i] = i % q == r ? 1 : 0;
      rows.insert(std::move(row));
    }
  }
  return from_row_set(n, rows);
}

SetSystem gen_random(std::size_t cols, std::size_t rows, std::uint64_t seed) {
  require_range(cols >= 1 && cols <= 14, "random needs 1 <= cols <= 14");
  require_range(rows >= 1 && rows <= 1024, "random needs 1 <= rows <= 1024");
  std::mt19937_64 rng(seed);
  std::vector<Bits> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Bits r(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) {
      r[j] = static_cast<std::uint8_t>(rng() & 1);
    }
    out.push_back(std::move(r));
  }
  return SetSystem::from_rows(cols, std::move(out)).canonical();
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  std::string body = trimmed(text);
  std::size_t open = body.find('(');
  if (open == std::string::npos || body.back() != ')') {
    throw InputError("family spec must look like kind(p1,...): " + text);
  }
  std::string name = trimmed(body.substr(0, open));
  std::string args = body.substr(open + 1, body.size() - open - 2);

  FamilySpec spec;
  bool known = false;
  for (const KindName& entry : kKindNames) {
    if (name == entry.name ||
        (entry.kind == FamilyKind::kIntervalUnions &&
         name == "interval-unions")) {
      spec.kind = entry.kind;
      known = true;
      break;
    }
  }
  if (!known) throw InputError("unknown family kind: " + name);

  std::stringstream ss(args);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trimmed(token);
    if (token.empty() ||
        token.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("family parameter is not a number: " + token);
    }
    try {
      spec.params.push_back(std::stoull(token));
    } catch (const std::exception&) {
      throw InputError("family parameter is not a number: " + token);
    }
  }
  if (spec.params.size() != kind_entry(spec.kind).arity) {
    throw InputError("family " + name + " takes " +
                     std::to_string(kind_entry(spec.kind).arity) +
                     " parameters");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = kind_entry(kind).name;
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(params[i]);
  }
  out += ')';
  return out;
}

SetSystem generate(const FamilySpec& spec) {
  if (spec.params.size() != kind_entry(spec.kind).arity) {
    throw InputError("family spec has the wrong number of parameters");
  }
  switch (spec.kind) {
    case FamilyKind::kPowerset:
      return gen_powerset(spec.params[0]);
    case FamilyKind::kThresholds:
      return gen_thresholds(spec.params[0]);
    case FamilyKind::kIntervals:
      return gen_intervals(spec.params[0]);
    case FamilyKind::kIntervalUnions:
      return gen_interval_unions(spec.params[0], spec.params[1]);
    case FamilyKind::kHalfplaneGrid:
      return gen_halfplane_grid(spec.params[0], spec.params[1]);
    case FamilyKind::kModClasses:
      return gen_mod_classes(spec.params[0], spec.params[1]);
    case FamilyKind::kRandom:
      return gen_random(spec.params[0], spec.params[1], spec.params[2]);
  }
  throw InputError("unknown family kind");
}

std::vector<FamilySpec> standard_corpus() {
  const char* specs[] = {
      "powerset(2)",
      "powerset(3)",
      "powerset(4)",
      "thresholds(6)",
      "thresholds(10)",
      "thresholds(14)",
      "intervals(5)",
      "intervals(8)",
      "intervals(12)",
      "k-interval-unions(6,2)",
      "k-interval-unions(8,2)",
      "mod-classes(10,4)",
      "mod-classes(12,6)",
      "halfplane-grid(3,3)",
      "halfplane-grid(4,3)",
      "random(8,30,101)",
  };
  std::vector<FamilySpec> out;
  for (const char* text : specs) out.push_back(FamilySpec::parse(text));
  return out;
}

}  // namespace vcdef
