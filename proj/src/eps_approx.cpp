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

#include "vcdef/eps_approx.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "vcdef/errors.hpp"

namespace vcdef {
namespace {

// Number of size-n multisets over c columns, C(c+n-1, n), saturated so the
// caller can compare against a cutoff without overflow.
std::uint64_t MultichooseSaturated(std::uint64_t c, std::uint64_t n,
                                   std::uint64_t cap) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    r = r * (c - 1 + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Hits per row for a multiset given as a non-decreasing index sequence.
std::size_t HitsInRow(const Bits& row, const std::vector<std::size_t>& seq) {
  std::size_t hits = 0;
  for (std::size_t i : seq) hits += row[i];
  return hits;
}

// True when every row satisfies |mu(row) * n - hits| <= eps * n, which is
// the approximation inequality cleared of the division by n.
bool WithinScaled(const std::vector<Rational>& scaled_masses,
                  const SetSystem& s, const std::vector<std::size_t>& seq,
                  const Rational& eps_n) {
  for (std::size_t r = 0; r < s.num_rows(); ++r) {
    Rational dev = scaled_masses[r] - static_cast<long>(HitsInRow(s.row(r), seq));
    if (rational_abs(dev) > eps_n) return false;
  }
  return true;
}

Multiset SequenceToMultiset(const std::vector<std::size_t>& seq) {
  std::vector<std::pair<std::size_t, std::size_t>> counts;
  for (std::size_t i : seq) counts.emplace_back(i, 1);
  return Multiset::of(std::move(counts));
}

// Advances a non-decreasing index sequence over [0, c) to its lexicographic
// successor. Returns false after the last one.
bool NextSequence(std::vector<std::size_t>& seq, std::size_t c) {
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (seq[i] + 1 < c) {
      const std::size_t v = seq[i] + 1;
      for (std::size_t j = i; j < seq.size(); ++j) seq[j] = v;
      return true;
    }
  }
  return false;
}

std::vector<Rational> RowMasses(const SetSystem& s, const Measure& mu) {
  std::vector<Rational> masses;
  masses.reserve(s.num_rows());
  for (const Bits& r : s.rows()) masses.push_back(mu.mass_of_row(r));
  return masses;
}

// First verified multiset of exactly this size, enumerating all of them.
std::optional<Multiset> ExhaustiveAtSize(const SetSystem& s,
                                         const std::vector<Rational>& masses,
                                         const Rational& eps, std::size_t n) {
  std::vector<Rational> scaled(masses.size());
  for (std::size_t r = 0; r < masses.size(); ++r) {
    scaled[r] = masses[r] * static_cast<long>(n);
  }
  const Rational eps_n = eps * static_cast<long>(n);
  std::vector<std::size_t> seq(n, 0);
  do {
    if (WithinScaled(scaled, s, seq, eps_n)) return SequenceToMultiset(seq);
  } while (NextSequence(seq, s.num_columns()));
  return std::nullopt;
}

}  // namespace

Rational approx_error(const SetSystem& s, const Measure& mu,
                      const Multiset& y) {
  if (mu.size() != s.num_columns()) {
    throw InputError("measure size does not match column count");
  }
  y.validate_against(s.num_columns());
  const long n = static_cast<long>(y.total());
  Rational worst = 0;
  for (const Bits& row : s.rows()) {
    Rational dev =
        mu.mass_of_row(row) -
        ratio(static_cast<long>(y.hits_in_row(row)), n);
    dev = rational_abs(dev);
    if (dev > worst) worst = dev;
  }
  return worst;
}

std::optional<Multiset> find_approximation(const SetSystem& s,
                                           const Measure& mu,
                                           const Rational& eps,
                                           const ApproximationSearch& opts) {
  if (mu.size() != s.num_columns()) {
    throw InputError("measure size does not match column count");
  }
  if (eps < 0) throw InputError("eps must be nonnegative");
  if (opts.budget == 0) throw InputError("budget must be at least 1");

  const std::vector<Rational> masses = RowMasses(s, mu);
  const std::size_t c = s.num_columns();

  std::uint64_t cumulative = 0;
  std::size_t size = 1;
  for (; size <= opts.budget; ++size) {
    const std::uint64_t candidates =
        MultichooseSaturated(c, size, opts.exhaustive_cutoff);
    if (cumulative + candidates > opts.exhaustive_cutoff) break;
    cumulative += candidates;
    if (auto y = ExhaustiveAtSize(s, masses, eps, size); y.has_value()) {
      return y;
    }
  }
  if (size > opts.budget) return std::nullopt;  // budget fully enumerated

  // Sampling phase: draw multisets from mu itself, doubling the size.
  std::mt19937_64 rng(opts.seed);
  std::vector<double> cum(c);
  double acc = 0;
  for (std::size_t i = 0; i < c; ++i) {
    acc += mu.weight(i).get_d();
    cum[i] = acc;
  }
  auto draw = [&]() {
    const double u =
        static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) * acc;
    return static_cast<std::size_t>(
        std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
  };
  for (;; size = std::min(size * 2, opts.budget)) {
    for (std::size_t trial = 0; trial < opts.trials_per_size; ++trial) {
      std::vector<std::pair<std::size_t, std::size_t>> counts;
      for (std::size_t i = 0; i < size; ++i) {
        counts.emplace_back(std::min(draw(), c - 1), 1);
      }
      Multiset y = Multiset::of(std::move(counts));
      if (approx_error(s, mu, y) <= eps) return y;
    }
    if (size == opts.budget) break;
  }
  return std::nullopt;
}

std::optional<Multiset> find_approximation(const SetSystem& s,
                                           const Measure& mu,
                                           const Rational& eps,
                                           std::size_t budget,
                                           std::uint64_t seed) {
  ApproximationSearch opts;
  opts.budget = budget;
  opts.seed = seed;
  return find_approximation(s, mu, eps, opts);
}

std::size_t min_approximation_size(const SetSystem& s, const Measure& mu,
                                   const Rational& eps, std::uint64_t cutoff) {
  if (mu.size() != s.num_columns()) {
    throw InputError("measure size does not match column count");
  }
  if (eps < 0) throw InputError("eps must be nonnegative");
  const std::vector<Rational> masses = RowMasses(s, mu);
  for (std::size_t size = 1;; ++size) {
    if (MultichooseSaturated(s.num_columns(), size, cutoff) > cutoff) {
      throw InputError(
          "minimal approximation size search exceeds the exhaustive cutoff at "
          "size " +
          std::to_string(size));
    }
    if (ExhaustiveAtSize(s, masses, eps, size).has_value()) return size;
  }
}

}  // namespace vcdef
