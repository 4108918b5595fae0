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

#include "vcdef/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vcdef/errors.hpp"

namespace vcdef {

GameMatrix::GameMatrix(std::vector<Bits> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw InputError("game matrix needs at least one row and one column");
  }
  for (const Bits& r : rows_) {
    if (r.size() != rows_.front().size()) {
      throw InputError("game matrix rows have unequal lengths");
    }
    for (std::uint8_t v : r) {
      if (v > 1) throw InputError("game matrix entries must be 0 or 1");
    }
  }
}

GameMatrix GameMatrix::agreement(const SetSystem& s, const TypeOverA& p,
                                 const HypothesisPool& pool) {
  if (p.bits.size() != s.num_columns()) {
    throw InputError("type width does not match the system");
  }
  if (pool.rows.empty()) throw InputError("empty hypothesis pool");
  std::vector<Bits> rows(s.num_columns(), Bits(pool.rows.size()));
  for (std::size_t a = 0; a < s.num_columns(); ++a) {
    for (std::size_t j = 0; j < pool.rows.size(); ++j) {
      rows[a][j] = s.bit(pool.rows[j], a) == (p.bits[a] != 0);
    }
  }
  return GameMatrix(std::move(rows));
}

bool GameMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= num_rows() || j >= num_cols()) {
    throw InputError("game matrix index out of range");
  }
  return rows_[i][j] != 0;
}

namespace {

Rational MinRowPayoff(const GameMatrix& b, const Measure& nu) {
  Rational best;
  for (std::size_t i = 0; i < b.num_rows(); ++i) {
    Rational payoff = 0;
    for (std::size_t j = 0; j < b.num_cols(); ++j) {
      if (b.at(i, j)) payoff += nu.weight(j);
    }
    if (i == 0 || payoff < best) best = payoff;
  }
  return best;
}

Rational MaxColumnPayoff(const GameMatrix& b, const Measure& mu) {
  Rational best;
  for (std::size_t j = 0; j < b.num_cols(); ++j) {
    Rational payoff = 0;
    for (std::size_t i = 0; i < b.num_rows(); ++i) {
      if (b.at(i, j)) payoff += mu.weight(i);
    }
    if (j == 0 || payoff > best) best = payoff;
  }
  return best;
}

}  // namespace

GameSolution game_value(const GameMatrix& b) {
  const std::size_t m = b.num_rows();   // constraints, one per matrix row
  const std::size_t n = b.num_cols();   // structural variables

  // Shift the payoffs to {1,2} so the value w of the shifted game is
  // positive, then solve min sum(x) subject to M x >= 1, x >= 0; at the
  // optimum sum(x) = 1/w, the normalized x is the column strategy and the
  // dual prices normalize to the row strategy. The all-slack basis is dual
  // feasible, so dual simplex pivots straight to the optimum; Bland's rule
  // guards against cycling.
  const std::size_t width = n + m + 1;  // structurals, slacks, rhs
  const std::size_t rhs = n + m;
  std::vector<std::vector<Rational>> tableau(
      m, std::vector<Rational>(width, Rational(0)));
  std::vector<Rational> objective(width, Rational(0));
  std::vector<std::size_t> basis(m);

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tableau[i][j] = -Rational(b.at(i, j) ? 2 : 1);
    }
    tableau[i][n + i] = 1;
    tableau[i][rhs] = -1;
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) objective[j] = 1;

  const std::size_t pivot_cap = 64 * (m + n) + 1024;
  for (std::size_t pivots = 0;; ++pivots) {
    if (pivots > pivot_cap) {
      throw VerificationError("simplex failed to terminate");
    }
    // Leaving row: negative basic value with the smallest basic index.
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (tableau[i][rhs] < 0 && (leave == m || basis[i] < basis[leave])) {
        leave = i;
      }
    }
    if (leave == m) break;  // primal feasible, hence optimal

    // Entering column: minimal ratio among negative coefficients, smallest
    // index on ties.
    std::size_t enter = width;
    Rational best_ratio;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (tableau[leave][j] >= 0) continue;
      Rational r = objective[j] / -tableau[leave][j];
      if (enter == width || r < best_ratio) {
        enter = j;
        best_ratio = r;
      }
    }
    if (enter == width) {
      throw VerificationError("shifted game reported infeasible");
    }

    const Rational pivot = tableau[leave][enter];
    for (std::size_t j = 0; j < width; ++j) tableau[leave][j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tableau[i][enter] == 0) continue;
      const Rational factor = tableau[i][enter];
      for (std::size_t j = 0; j < width; ++j) {
        tableau[i][j] -= factor * tableau[leave][j];
      }
    }
    if (objective[enter] != 0) {
      const Rational factor = objective[enter];
      for (std::size_t j = 0; j < width; ++j) {
        objective[j] -= factor * tableau[leave][j];
      }
    }
    basis[leave] = enter;
  }

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = tableau[i][rhs];
  }
  std::vector<Rational> y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = objective[n + i];

  Rational sum_x = 0;
  for (const Rational& v : x) sum_x += v;
  Rational sum_y = 0;
  for (const Rational& v : y) sum_y += v;
  if (sum_x <= 0 || sum_x != sum_y) {
    throw VerificationError("simplex optimum violates strong duality");
  }

  for (Rational& v : x) v /= sum_x;
  for (Rational& v : y) v /= sum_y;
  GameSolution solution{Rational(1) / sum_x - 1, Measure::of(std::move(x)),
                        Measure::of(std::move(y)), true, Rational(0)};

  if (MinRowPayoff(b, solution.nu) != solution.value ||
      MaxColumnPayoff(b, solution.mu) != solution.value) {
    throw VerificationError("optimal strategies fail their value check");
  }
  return solution;
}

GameSolution game_value_approx(const GameMatrix& b,
                               const SolverOptions& opts) {
  if (opts.tolerance <= 0) throw InputError("tolerance must be positive");
  const std::size_t m = b.num_rows();
  const std::size_t n = b.num_cols();

  for (std::size_t rounds = 4096;; rounds *= 2) {
    if (rounds > (std::size_t{1} << 24)) {
      throw VerificationError("iterative solver missed its tolerance");
    }
    const double eta = std::sqrt(std::log(std::max<std::size_t>(m, 2)) /
                                 static_cast<double>(rounds));

    std::vector<double> weights(m, 1.0);
    std::vector<double> mu_total(m, 0.0);
    std::vector<std::size_t> counts(n, 0);
    for (std::size_t t = 0; t < rounds; ++t) {
      double total = 0;
      for (double w : weights) total += w;
      // Column best response to the current row mixture.
      std::size_t best = 0;
      double best_payoff = -1;
      for (std::size_t j = 0; j < n; ++j) {
        double payoff = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (b.at(i, j)) payoff += weights[i];
        }
        if (payoff > best_payoff) {
          best_payoff = payoff;
          best = j;
        }
      }
      counts[best]++;
      for (std::size_t i = 0; i < m; ++i) {
        mu_total[i] += weights[i] / total;
        if (b.at(i, best)) weights[i] *= std::exp(-eta);
      }
      // Keep weights away from denormals on long runs.
      if ((t & 1023) == 1023) {
        const double scale = 1.0 / total;
        for (double& w : weights) w *= scale;
      }
    }

    // nu: exact by construction. mu: round to denominator 2^20, dump the
    // remainder on the heaviest row; both are genuine distributions, so the
    // certificate below is sound regardless of rounding quality.
    std::vector<Rational> nu(n);
    for (std::size_t j = 0; j < n; ++j) {
      nu[j] = ratio(counts[j], rounds);
    }
    const long denom = 1 << 20;
    std::vector<long> rounded(m);
    long assigned = 0;
    std::size_t heaviest = 0;
    for (std::size_t i = 0; i < m; ++i) {
      rounded[i] = std::lround(mu_total[i] / static_cast<double>(rounds) *
                               static_cast<double>(denom));
      rounded[i] = std::max(rounded[i], 0L);
      assigned += rounded[i];
      if (mu_total[i] > mu_total[heaviest]) heaviest = i;
    }
    rounded[heaviest] += denom - assigned;
    if (rounded[heaviest] < 0) continue;  // pathological rounding; retry
    std::vector<Rational> mu(m);
    for (std::size_t i = 0; i < m; ++i) mu[i] = ratio(rounded[i], denom);

    GameSolution solution{Rational(0), Measure::of(std::move(nu)),
                          Measure::of(std::move(mu)), false, Rational(0)};
    solution.value = MinRowPayoff(b, solution.nu);
    solution.gap = MaxColumnPayoff(b, solution.mu) - solution.value;
    if (solution.gap < 0) {
      throw VerificationError("certified bounds crossed");
    }
    if (solution.gap <= opts.tolerance) return solution;
  }
}

GameSolution solve_game(const GameMatrix& b, const SolverOptions& opts) {
  const std::uint64_t cells =
      static_cast<std::uint64_t>(b.num_rows()) * b.num_cols();
  if (!opts.force_approx && cells <= opts.exact_cells_cutoff) {
    return game_value(b);
  }
  return game_value_approx(b, opts);
}

}  // namespace vcdef
