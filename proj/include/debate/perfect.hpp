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
// Deciding whether a zero-error policy exists, and exhaustive search over
// binary-valued policies.
//
// A policy has zero error exactly when, in every scenario that matters, the
// desired winner owns a pure action that is favored with probability 1
// against everything the loser can play (value 1 of a [0,1] game forces a
// pure all-ones row).  Existence therefore reduces to picking one such
// action per scenario so that no two opposite-winner scenarios force the
// same policy cell to both 1 and 0 - a finite constraint search.  Worst
// case is exponential, as it must be.

#ifndef DEBATE_PERFECT_HPP
#define DEBATE_PERFECT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "debate/error_eval.hpp"
#include "debate/game.hpp"
#include "debate/matrix_game.hpp"

namespace debate {

struct PerfectWitness {
  // Chosen unbeatable action per contributing scenario id; the reserved
  // token stands for the default action.
  std::map<std::string, ActionLabel> perfect_actions;
  Policy policy;  // realizes zero error; forced cells set, the rest 1/2
};

namespace detail {

struct DeciderScenario {
  int index = 0;            // original scenario index
  int winner = 1;           // agent the principal wants to win
  std::vector<int> choices; // winner's available action indices, -1 last (default)
  std::vector<char> in1, in2;  // availability masks over actions1/actions2
};

inline bool decider_conflict(const DeciderScenario& win1,
                             int b1,  // action of agent 1, -1 default
                             const DeciderScenario& win2,
                             int b2) {  // action of agent 2, -1 default
  // Forced cells clash iff each winner's action is available to the loser
  // side of the other scenario (the default always is).
  bool b2_in_win1 = b2 < 0 || win1.in2[b2];
  bool b1_in_win2 = b1 < 0 || win2.in1[b1];
  return b2_in_win1 && b1_in_win2;
}

}  // namespace detail

inline std::optional<PerfectWitness> decide_perfect(const Ckdg& g) {
  require_valid(g);
  auto idx1 = detail::index_of(g.actions1);
  auto idx2 = detail::index_of(g.actions2);
  const int n1 = static_cast<int>(g.actions1.size());
  const int n2 = static_cast<int>(g.actions2.size());

  std::vector<detail::DeciderScenario> sc;
  for (int i = 0; i < static_cast<int>(g.scenarios.size()); ++i) {
    const auto& s = g.scenarios[i];
    if (!(s.prob > 0.0) || s.u1 == s.u2) continue;
    detail::DeciderScenario d;
    d.index = i;
    d.winner = s.u1 > s.u2 ? 1 : 2;
    d.in1.assign(n1, 0);
    d.in2.assign(n2, 0);
    for (const auto& a : s.avail1) d.in1[idx1.at(a)] = 1;
    for (const auto& a : s.avail2) d.in2[idx2.at(a)] = 1;
    const auto& avail = d.winner == 1 ? s.avail1 : s.avail2;
    const auto& idx = d.winner == 1 ? idx1 : idx2;
    for (const auto& a : avail) d.choices.push_back(idx.at(a));
    d.choices.push_back(-1);
    sc.push_back(std::move(d));
  }

  // Fail-first: scenarios with the fewest winner options go first.
  std::stable_sort(sc.begin(), sc.end(),
                   [](const auto& a, const auto& b) {
                     return a.choices.size() < b.choices.size();
                   });

  const int n = static_cast<int>(sc.size());
  std::vector<int> pick(n, -2);

  // Depth-first search over winner actions with pairwise conflict pruning.
  std::function<bool(int)> dfs = [&](int depth) -> bool {
    if (depth == n) return true;
    auto& d = sc[depth];
    for (int c : d.choices) {
      bool ok = true;
      for (int prev = 0; prev < depth && ok; ++prev) {
        if (sc[prev].winner == d.winner) continue;
        if (d.winner == 1)
          ok = !detail::decider_conflict(d, c, sc[prev], pick[prev]);
        else
          ok = !detail::decider_conflict(sc[prev], pick[prev], d, c);
      }
      if (!ok) continue;
      pick[depth] = c;
      if (dfs(depth + 1)) return true;
    }
    pick[depth] = -2;
    return false;
  };
  if (!dfs(0)) return std::nullopt;

  PerfectWitness w;
  w.policy = constant_policy(g.actions1, g.actions2, 0.5);
  const int drow = w.policy.default_row(), dcol = w.policy.default_col();
  // Forced-cell consistency is re-tracked while building; a clash here
  // would mean the conflict relation above is wrong.
  Matrix forced(n1 + 1, n2 + 1, -1.0);
  auto set_cell = [&](int r, int c, double v) {
    double cur = forced(r, c);
    if (cur >= 0.0 && cur != v) throw Error("witness construction clash");
    forced(r, c) = v;
    w.policy.p1(r, c) = v;
  };
  for (int k = 0; k < n; ++k) {
    const auto& d = sc[k];
    const auto& s = g.scenarios[d.index];
    int b = pick[k];
    if (d.winner == 1) {
      int row = b < 0 ? drow : b;
      for (int c = 0; c < n2; ++c)
        if (d.in2[c]) set_cell(row, c, 1.0);
      set_cell(row, dcol, 1.0);
    } else {
      int col = b < 0 ? dcol : b;
      for (int r = 0; r < n1; ++r)
        if (d.in1[r]) set_cell(r, col, 0.0);
      set_cell(drow, col, 0.0);
    }
    const auto& labels = d.winner == 1 ? g.actions1 : g.actions2;
    w.perfect_actions[s.id] = b < 0 ? ActionLabel(kDefaultToken) : labels[b];
  }

  if (eval_ckdg(g, w.policy).total > 1e-9)
    throw Error("perfect witness failed the zero-error re-check");
  return w;
}

inline std::optional<PerfectWitness> decide_perfect_ckddg(const Ckddg& b) {
  if (b.kind != GameKind::kCommonKnowledge)
    throw InputError("decide_perfect_ckddg requires a common-knowledge game");
  return decide_perfect(unfurl(b));
}

struct BinarySearchResult {
  double min_error = 0.0;
  Policy argmin;
  std::uint64_t policies_examined = 0;
};

// Cell of a policy grid over (actions + default)^2; row/col equal to the
// action count denote the default.
struct GridCell {
  int row = 0, col = 0;
};

inline std::vector<GridCell> full_grid(const Ckddg& b) {
  const int n = static_cast<int>(b.actions.size());
  std::vector<GridCell> cells;
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) cells.push_back({r, c});
  return cells;
}

// Policy whose enumerated cells take the bits of `word` and whose other
// cells sit at 1/2.
inline Policy binary_policy_from_word(const Ckddg& b,
                                      const std::vector<GridCell>& cells,
                                      std::uint64_t word) {
  Policy p = constant_policy(b.actions, b.actions, 0.5);
  for (size_t k = 0; k < cells.size(); ++k)
    p.p1(cells[k].row, cells[k].col) = (word >> k) & 1 ? 1.0 : 0.0;
  return p;
}

// Exhaustive minimum over every {0,1} assignment of the enumerated cells.
//
// Per (scenario, orientation) the loser value depends only on the bits of
// the cells inside that restricted game, so each restricted game gets a
// value table over its own bit pattern (solved once per pattern), and the
// full scan walks a Gray code updating per-game indices incrementally.
inline BinarySearchResult brute_force_min_binary_error(
    const Ckddg& b, std::optional<std::vector<GridCell>> cell_subset = std::nullopt,
    bool allow_large = false, int threads = 1) {
  if (b.kind != GameKind::kCommonKnowledge)
    throw InputError("binary policy search requires a common-knowledge game");
  require_valid(b);
  const int na = static_cast<int>(b.actions.size());
  std::vector<GridCell> cells = cell_subset ? *cell_subset : full_grid(b);
  if (!cell_subset && (na + 1) * (na + 1) > 25 && !allow_large)
    throw InputError("full-grid search over " +
                     std::to_string((na + 1) * (na + 1)) +
                     " cells needs an explicit override or a cell subset");
  const int nbits = static_cast<int>(cells.size());
  if (nbits > 25 && !allow_large)
    throw InputError("search space 2^" + std::to_string(nbits) +
                     " needs an explicit override");
  if (nbits > 30) throw InputError("search space exceeds 2^30 cells");
  for (const auto& cell : cells)
    if (cell.row < 0 || cell.row > na || cell.col < 0 || cell.col > na)
      throw InputError("cell subset indexes outside the policy grid");

  std::vector<int> cell_id(static_cast<size_t>(na + 1) * (na + 1), -1);
  for (int k = 0; k < nbits; ++k) {
    int& slot = cell_id[static_cast<size_t>(cells[k].row) * (na + 1) + cells[k].col];
    if (slot >= 0) throw InputError("duplicate cell in subset");
    slot = k;
  }

  auto idx = detail::index_of(b.actions);
  struct SubGame {
    double weight = 0.0;
    std::vector<int> rows, cols;    // grid indices, default = na
    bool loser_is_column = false;   // orientation: loser plays the columns
    std::vector<int> bit_of_cell;   // local bit -> global bit
    std::vector<std::pair<int, int>> cell_pos;  // local bit -> (r, c) in game
    std::vector<double> table;      // loser value per local pattern
    std::uint64_t cur = 0;          // local pattern for the current word
  };

  std::vector<SubGame> games;
  for (const auto& s : b.scenarios) {
    if (!(s.prob > 0.0)) continue;
    std::vector<int> w, l;
    for (const auto& a : s.avail_winner) w.push_back(idx.at(a));
    w.push_back(na);
    for (const auto& a : s.avail_loser) l.push_back(idx.at(a));
    l.push_back(na);
    for (int orient = 0; orient < 2; ++orient) {
      SubGame sg;
      sg.weight = 0.5 * s.prob;
      sg.loser_is_column = orient == 0;  // winner holds the rows first
      sg.rows = orient == 0 ? w : l;
      sg.cols = orient == 0 ? l : w;
      for (int r : sg.rows)
        for (int c : sg.cols) {
          int id = cell_id[static_cast<size_t>(r) * (na + 1) + c];
          if (id >= 0) {
            sg.bit_of_cell.push_back(id);
            sg.cell_pos.push_back({r, c});
          }
        }
      if (static_cast<int>(sg.bit_of_cell.size()) > 22)
        throw InputError("a restricted game touches more than 2^22 patterns; "
                         "narrow the cell subset");
      games.push_back(std::move(sg));
    }
  }

  // Value tables: exact game values of matrices over {0, 1/2, 1}.
  for (auto& sg : games) {
    const int bits = static_cast<int>(sg.bit_of_cell.size());
    const int nr = static_cast<int>(sg.rows.size());
    const int nc = static_cast<int>(sg.cols.size());
    sg.table.assign(1ULL << bits, 0.0);
    parallel_for(static_cast<int>(sg.table.size()), threads, [&](int pattern) {
      thread_local MatrixGameSolver solver;
      Matrix base(nr, nc, 0.5);
      for (int kk = 0; kk < bits; ++kk) {
        auto [r, c] = sg.cell_pos[kk];
        int ri = static_cast<int>(std::find(sg.rows.begin(), sg.rows.end(), r) -
                                  sg.rows.begin());
        int ci = static_cast<int>(std::find(sg.cols.begin(), sg.cols.end(), c) -
                                  sg.cols.begin());
        base(ri, ci) = (pattern >> kk) & 1 ? 1.0 : 0.0;
      }
      double v;
      if (sg.loser_is_column) {
        Matrix loser(nc, nr);
        for (int r = 0; r < nr; ++r)
          for (int c = 0; c < nc; ++c) loser(c, r) = 1.0 - base(r, c);
        v = solver.value(loser);
      } else {
        v = solver.value(base);
      }
      sg.table[pattern] = v;
    });
  }

  std::vector<std::vector<std::pair<int, std::uint64_t>>> flips(nbits);
  for (size_t gi = 0; gi < games.size(); ++gi)
    for (size_t lb = 0; lb < games[gi].bit_of_cell.size(); ++lb)
      flips[games[gi].bit_of_cell[lb]].push_back(
          {static_cast<int>(gi), 1ULL << lb});

  auto exact_error = [&]() {
    double e = 0.0;
    for (const auto& sg : games) e += sg.weight * sg.table[sg.cur];
    return e;
  };

  BinarySearchResult result;
  double err = exact_error();
  result.min_error = err;
  std::uint64_t best_word = 0, word = 0;
  const std::uint64_t total = 1ULL << nbits;
  for (std::uint64_t i = 1; i < total; ++i) {
    int bit = __builtin_ctzll(i);
    word ^= 1ULL << bit;
    for (auto [gi, mask] : flips[bit]) {
      auto& sg = games[gi];
      err -= sg.weight * sg.table[sg.cur];
      sg.cur ^= mask;
      err += sg.weight * sg.table[sg.cur];
    }
    if (err < result.min_error - 1e-12) {
      // Guard the running sum against drift before accepting a minimum.
      double exact = exact_error();
      err = exact;
      if (exact < result.min_error) {
        result.min_error = exact;
        best_word = word;
      }
    }
    if ((i & 0xFFFFF) == 0) err = exact_error();
  }
  result.policies_examined = total;
  result.argmin = binary_policy_from_word(b, cells, best_word);
  return result;
}

}  // namespace debate

#endif  // DEBATE_PERFECT_HPP
