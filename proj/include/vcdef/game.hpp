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

#ifndef VCDEF_GAME_HPP_
#define VCDEF_GAME_HPP_

#include <cstdint>
#include <vector>

#include "vcdef/measure.hpp"
#include "vcdef/rational.hpp"
#include "vcdef/set_system.hpp"
#include "vcdef/skolem.hpp"

namespace vcdef {

// A 0/1 payoff matrix. The column player mixes over columns to maximize the
// minimum row payoff; the row player mixes over rows to minimize the
// maximum column payoff.
class GameMatrix {
 public:
  explicit GameMatrix(std::vector<Bits> rows);

  // B[a][j] = 1 iff pool hypothesis j matches p's bit at column a. Matrix
  // rows range over the system's columns, matrix columns over the pool.
  static GameMatrix agreement(const SetSystem& s, const TypeOverA& p,
                              const HypothesisPool& pool);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return rows_.front().size(); }
  bool at(std::size_t i, std::size_t j) const;
  const Bits& row(std::size_t i) const { return rows_[i]; }

 private:
  std::vector<Bits> rows_;
};

using MixedStrategy = Measure;

// value is a certified lower bound on the game value: min over matrix rows
// of (B nu) equals it. With the exact solver, mu certifies the same number
// from above and gap is 0; with the iterative solver, max over columns of
// (mu^T B) exceeds it by at most gap. All certification arithmetic is
// exact.
struct GameSolution {
  Rational value;
  MixedStrategy nu;
  MixedStrategy mu;
  bool exact = true;
  Rational gap;
};

struct SolverOptions {
  bool force_approx = false;
  Rational tolerance = Rational(1, 48);
  // Exact solving is the default up to this many matrix cells.
  std::uint64_t exact_cells_cutoff = 4'000'000;
};

// Exact value and optimal strategies by a dual-simplex solve of the shifted
// game, with strong duality and both complementarity equalities re-checked
// in rational arithmetic.
GameSolution game_value(const GameMatrix& b);

// Multiplicative-weights iterations in floating point, then an exact
// certificate: nu comes out as empirical counts, mu is rounded to exact
// rationals, and the run only returns once the certified gap is within
// tolerance. Iterations double until then.
GameSolution game_value_approx(const GameMatrix& b,
                               const SolverOptions& opts = {});

// game_value below the cell cutoff, the iterative solver above it.
GameSolution solve_game(const GameMatrix& b, const SolverOptions& opts = {});

}  // namespace vcdef

#endif  // VCDEF_GAME_HPP_
