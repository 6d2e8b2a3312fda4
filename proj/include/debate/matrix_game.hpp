// Copyright 2026 The debate-games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Exact value and optimal mixed strategies of a two-player zero-sum matrix
// game, for the row player maximizing `payoff`.  Uses the classic reduction:
// shift payoffs positive, then solve  max sum(u) : R'u <= 1, u >= 0  with a
// slack-only simplex.  The optimum gives the column strategy directly and
// the row strategy from the slack reduced costs.

#ifndef DEBATE_MATRIX_GAME_HPP
#define DEBATE_MATRIX_GAME_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "debate/common.hpp"

namespace debate {

struct MatrixGameSolution {
  double value = 0.0;
  std::vector<double> row_strategy, col_strategy;
};

// Largest amount by which either returned strategy fails its guarantee:
// row_strategy must secure >= value against every column and col_strategy
// must cap the row player at <= value against every row.
inline double strategy_gap(const Matrix& payoff, const MatrixGameSolution& s) {
  double gap = 0.0;
  for (int c = 0; c < payoff.cols(); ++c) {
    double got = 0.0;
    for (int r = 0; r < payoff.rows(); ++r) got += s.row_strategy[r] * payoff(r, c);
    gap = std::max(gap, s.value - got);
  }
  for (int r = 0; r < payoff.rows(); ++r) {
    double got = 0.0;
    for (int c = 0; c < payoff.cols(); ++c) got += s.col_strategy[c] * payoff(r, c);
    gap = std::max(gap, got - s.value);
  }
  return gap;
}

// Reusable solver; keeps its tableau allocation across calls so that bulk
// workloads (per-scenario evaluation, policy enumeration) avoid churn.
class MatrixGameSolver {
 public:
  double value(const Matrix& payoff) { return run(payoff, nullptr, nullptr); }

  MatrixGameSolution solve(const Matrix& payoff) {
    MatrixGameSolution s;
    s.value = run(payoff, &s.row_strategy, &s.col_strategy);
    double gap = strategy_gap(payoff, s);
    if (gap > 1e-8) {
      s.value = run(payoff, &s.row_strategy, &s.col_strategy, /*bland=*/true);
      gap = strategy_gap(payoff, s);
      if (gap > 1e-7) throw Error("matrix game solve failed verification");
    }
    return s;
  }

 private:
  double run(const Matrix& payoff, std::vector<double>* row_strategy,
             std::vector<double>* col_strategy, bool bland_always = false) {
    const int m = payoff.rows(), n = payoff.cols();
    if (m == 0 || n == 0) throw InputError("matrix game payoff is empty");
    const double kPivotEps = 1e-11;
    const double kOptEps = 1e-12;

    double lo = payoff(0, 0);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) {
        double v = payoff(r, c);
        if (!std::isfinite(v)) throw InputError("matrix game payoff not finite");
        lo = std::min(lo, v);
      }
    const double shift = lo - 1.0;  // entries of R' = R - shift are >= 1

    const int width = n + m + 1;  // u columns, slack columns, rhs
    t_.assign(static_cast<size_t>(m + 1) * width, 0.0);
    basis_.resize(m);
    auto row = [&](int i) { return t_.data() + static_cast<size_t>(i) * width; };
    for (int i = 0; i < m; ++i) {
      double* ti = row(i);
      for (int j = 0; j < n; ++j) ti[j] = payoff(i, j) - shift;
      ti[n + i] = 1.0;
      ti[n + m] = 1.0;
      basis_[i] = n + i;
    }
    double* obj = row(m);
    for (int j = 0; j < n; ++j) obj[j] = -1.0;

    const long bland_after = bland_always ? -1 : 50L * (m + n) + 200;
    for (long iter = 0;; ++iter) {
      if (iter > 200L * (m + n) + 20000L)
        throw Error("matrix game simplex did not terminate");
      const bool bland = iter > bland_after;
      int pc = -1;
      double best = -kOptEps;
      for (int j = 0; j < n + m; ++j) {
        if (obj[j] < best) {
          best = obj[j];
          pc = j;
          if (bland) break;
        }
      }
      if (pc < 0) break;
      int pr = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        double a = row(i)[pc];
        if (a > kPivotEps) {
          double ratio = row(i)[n + m] / a;
          if (pr < 0 || ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && basis_[i] < basis_[pr])) {
            pr = i;
            best_ratio = ratio;
          }
        }
      }
      if (pr < 0) throw Error("matrix game simplex unbounded");
      double* prow = row(pr);
      double inv = 1.0 / prow[pc];
      for (int j = 0; j < width; ++j) prow[j] *= inv;
      prow[pc] = 1.0;
      for (int i = 0; i <= m; ++i) {
        if (i == pr) continue;
        double* ti = row(i);
        double f = ti[pc];
        if (f == 0.0) continue;
        for (int j = 0; j < width; ++j) ti[j] -= f * prow[j];
        ti[pc] = 0.0;
      }
      basis_[pr] = pc;
    }

    const double z = obj[n + m];  // = 1 / v'
    const double value = 1.0 / z + shift;
    if (col_strategy) {
      col_strategy->assign(n, 0.0);
      for (int i = 0; i < m; ++i)
        if (basis_[i] < n) (*col_strategy)[basis_[i]] = row(i)[n + m] / z;
      normalize(*col_strategy);
      row_strategy->assign(m, 0.0);
      for (int i = 0; i < m; ++i) (*row_strategy)[i] = obj[n + i] / z;
      normalize(*row_strategy);
    }
    return value;
  }

  static void normalize(std::vector<double>& p) {
    double sum = 0.0;
    for (auto& v : p) {
      if (v < 0.0) v = 0.0;
      sum += v;
    }
    if (sum > 0.0)
      for (auto& v : p) v /= sum;
  }

  std::vector<double> t_;
  std::vector<int> basis_;
};

inline MatrixGameSolution solve_matrix_game(const Matrix& payoff) {
  MatrixGameSolver solver;
  return solver.solve(payoff);
}

inline double matrix_game_value(const Matrix& payoff) {
  MatrixGameSolver solver;
  return solver.value(payoff);
}

}  // namespace debate

#endif  // DEBATE_MATRIX_GAME_HPP
