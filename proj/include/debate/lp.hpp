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
// Dense two-phase primal simplex.  Problems here are small (at most a few
// hundred rows) and well scaled: coefficients are probabilities and [0,1]
// payoffs.  Dantzig pricing with a Bland fallback for degeneracy.

#ifndef DEBATE_LP_HPP
#define DEBATE_LP_HPP

#include <cmath>
#include <vector>

#include "debate/common.hpp"

namespace debate {

struct LpRow {
  std::vector<double> a;
  char rel = 'L';  // 'L' <=, 'G' >=, 'E' ==
  double rhs = 0.0;
};

struct LpSolution {
  double objective = 0.0;
  std::vector<double> x;
};

// Maximizes c.x subject to the given rows and x >= 0.  Throws Error if the
// problem is infeasible or unbounded; callers in this library construct
// problems where neither can occur.
inline LpSolution solve_lp_max(int nvars, const std::vector<double>& c,
                               std::vector<LpRow> rows) {
  const double kPivotEps = 1e-11;
  const double kOptEps = 1e-10;
  const int m = static_cast<int>(rows.size());

  for (auto& r : rows) {
    r.a.resize(nvars, 0.0);
    if (r.rhs < 0.0) {
      for (auto& v : r.a) v = -v;
      r.rhs = -r.rhs;
      r.rel = r.rel == 'L' ? 'G' : r.rel == 'G' ? 'L' : 'E';
    }
  }

  int nslack = 0, nart = 0;
  for (const auto& r : rows) {
    if (r.rel != 'E') ++nslack;
    if (r.rel != 'L') ++nart;
  }
  const int ncols = nvars + nslack + nart;
  const int rhs = ncols;

  std::vector<std::vector<double>> t(m + 2, std::vector<double>(ncols + 1, 0.0));
  std::vector<double>& obj = t[m];      // phase-2 reduced costs, obj[rhs] = z
  std::vector<double>& obj1 = t[m + 1]; // phase-1 reduced costs
  std::vector<int> basis(m, -1);
  std::vector<bool> artificial(ncols, false);

  int scol = nvars, acol = nvars + nslack;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nvars; ++j) t[i][j] = rows[i].a[j];
    t[i][rhs] = rows[i].rhs;
    if (rows[i].rel == 'L') {
      t[i][scol] = 1.0;
      basis[i] = scol++;
    } else if (rows[i].rel == 'G') {
      t[i][scol++] = -1.0;
      t[i][acol] = 1.0;
      artificial[acol] = true;
      basis[i] = acol++;
    } else {
      t[i][acol] = 1.0;
      artificial[acol] = true;
      basis[i] = acol++;
    }
  }
  for (int j = 0; j < nvars; ++j) obj[j] = -c[j];
  for (int i = 0; i < m; ++i)
    if (artificial[basis[i]])
      for (int j = 0; j <= ncols; ++j) obj1[j] -= t[i][j];
  for (int j = nvars + nslack; j < ncols; ++j) obj1[j] += 1.0;

  auto pivot = [&](int pr, int pc) {
    double inv = 1.0 / t[pr][pc];
    for (int j = 0; j <= ncols; ++j) t[pr][j] *= inv;
    t[pr][pc] = 1.0;
    for (int i = 0; i < m + 2; ++i) {
      if (i == pr) continue;
      double f = t[i][pc];
      if (f == 0.0) continue;
      for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[pr][j];
      t[i][pc] = 0.0;
    }
    basis[pr] = pc;
  };

  auto run = [&](std::vector<double>& z, bool block_art) {
    const long bland_after = 60L * (m + ncols) + 200;
    for (long iter = 0;; ++iter) {
      if (iter > 400L * (m + ncols) + 100000L)
        throw Error("simplex iteration limit exceeded");
      bool bland = iter > bland_after;
      int pc = -1;
      double best = -kOptEps;
      for (int j = 0; j < ncols; ++j) {
        if (block_art && artificial[j]) continue;
        if (z[j] < best) {
          best = z[j];
          pc = j;
          if (bland) break;
        }
      }
      if (pc < 0) return;
      int pr = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        if (t[i][pc] > kPivotEps) {
          double ratio = t[i][rhs] / t[i][pc];
          if (pr < 0 || ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && basis[i] < basis[pr])) {
            pr = i;
            best_ratio = ratio;
          }
        }
      }
      if (pr < 0) throw Error("linear program is unbounded");
      pivot(pr, pc);
    }
  };

  if (nart > 0) {
    run(obj1, false);
    if (obj1[rhs] < -1e-7) throw Error("linear program is infeasible");
    // Drive basic artificials out on any usable column; rows that admit no
    // pivot are redundant and harmless at level zero.
    for (int i = 0; i < m; ++i) {
      if (!artificial[basis[i]]) continue;
      for (int j = 0; j < nvars + nslack; ++j) {
        if (std::abs(t[i][j]) > 1e-9) {
          pivot(i, j);
          break;
        }
      }
    }
  }
  run(obj, true);

  LpSolution sol;
  sol.x.assign(nvars, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < nvars) sol.x[basis[i]] = t[i][rhs];
  sol.objective = obj[rhs];
  return sol;
}

}  // namespace debate

#endif  // DEBATE_LP_HPP
