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
// Zero-sum Bayesian games induced by a private-information distinguishing
// game and a policy.  An agent's type is the set of non-default actions it
// can access; scenarios with identical availability pairs are merged, since
// agents cannot condition on anything finer than their own type.
//
// Strategies are restricted to available actions plus the default: the
// default weakly dominates any unavailable action (it earns at least 0
// against an available opponent action and 1 against an unavailable one,
// versus 0 and 1/2), so the restriction cannot change the game value.

#ifndef DEBATE_BAYES_HPP
#define DEBATE_BAYES_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "debate/game.hpp"
#include "debate/lp.hpp"

namespace debate {

// Joint distribution over (agent-1 type, agent-2 type) pairs.  Types are
// sorted action-index sets into the game's action list.
struct BayesTypeProfile {
  struct Entry {
    std::vector<int> type1, type2;
    double prob = 0.0;
  };
  std::vector<Entry> pairs;  // first-appearance order, probabilities merged
};

namespace detail {

inline std::vector<int> action_indices(const std::vector<ActionLabel>& avail,
                                       const std::unordered_map<std::string, int>& idx) {
  std::vector<int> out;
  out.reserve(avail.size());
  for (const auto& a : avail) out.push_back(idx.at(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// winner_agent selects which agent occupies the winner role: with 1, agent 1
// draws the winner availability and agent 2 the loser availability; with 2,
// swapped.  Zero-probability scenarios are dropped.
inline BayesTypeProfile bayes_type_profile(const Ckddg& b, int winner_agent) {
  if (winner_agent != 1 && winner_agent != 2)
    throw InputError("winner_agent must be 1 or 2");
  require_valid(b);
  auto idx = detail::index_of(b.actions);
  BayesTypeProfile profile;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
  for (const auto& s : b.scenarios) {
    if (s.prob <= 0.0) continue;
    auto w = detail::action_indices(s.avail_winner, idx);
    auto l = detail::action_indices(s.avail_loser, idx);
    auto key = winner_agent == 1 ? std::make_pair(w, l) : std::make_pair(l, w);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, static_cast<int>(profile.pairs.size()));
      profile.pairs.push_back({key.first, key.second, s.prob});
    } else {
      profile.pairs[it->second].prob += s.prob;
    }
  }
  return profile;
}

struct BayesSolution {
  double value1 = 0.0, value2 = 0.0;
  std::vector<std::vector<int>> types1, types2;  // distinct types per agent
  // Strategy per type, over that type's actions in sorted order with the
  // default action last.
  std::vector<std::vector<double>> strategy1, strategy2;
};

namespace detail {

struct BayesSetup {
  std::vector<std::vector<int>> types1, types2;
  std::vector<std::vector<std::pair<int, double>>> joint_by_t2;  // (t1, prob)
  std::vector<std::vector<std::pair<int, double>>> joint_by_t1;  // (t2, prob)
};

inline int intern_type(std::vector<std::vector<int>>* types,
                       std::map<std::vector<int>, int>* seen,
                       const std::vector<int>& t) {
  auto it = seen->find(t);
  if (it != seen->end()) return it->second;
  int id = static_cast<int>(types->size());
  seen->emplace(t, id);
  types->push_back(t);
  return id;
}

inline BayesSetup make_setup(const BayesTypeProfile& profile) {
  BayesSetup s;
  std::map<std::vector<int>, int> seen1, seen2;
  std::vector<std::tuple<int, int, double>> joint;
  for (const auto& e : profile.pairs) {
    int a = intern_type(&s.types1, &seen1, e.type1);
    int b = intern_type(&s.types2, &seen2, e.type2);
    joint.emplace_back(a, b, e.prob);
  }
  s.joint_by_t1.resize(s.types1.size());
  s.joint_by_t2.resize(s.types2.size());
  for (auto& [a, b, p] : joint) {
    s.joint_by_t1[a].emplace_back(b, p);
    s.joint_by_t2[b].emplace_back(a, p);
  }
  return s;
}

// Maximin LP for one side of a zero-sum Bayesian game.  Variables are a
// distribution per own type over (type actions, default); the opponent best
// responds per type, so one guarantee variable per opponent type suffices.
// payoff(own_action, opp_action) uses -1 for the default action.
template <typename Payoff>
inline double bayes_side_lp(
    const std::vector<std::vector<int>>& own_types,
    const std::vector<std::vector<int>>& opp_types,
    const std::vector<std::vector<std::pair<int, double>>>& joint_by_opp,
    Payoff&& payoff, std::vector<std::vector<double>>* strategies) {
  int nvars = 0;
  std::vector<int> qbase(own_types.size());
  for (size_t t = 0; t < own_types.size(); ++t) {
    qbase[t] = nvars;
    nvars += static_cast<int>(own_types[t].size()) + 1;
  }
  int wbase = nvars;
  nvars += static_cast<int>(opp_types.size());

  std::vector<double> c(nvars, 0.0);
  for (size_t t = 0; t < opp_types.size(); ++t) c[wbase + t] = 1.0;

  std::vector<LpRow> lp_rows;
  for (size_t t = 0; t < own_types.size(); ++t) {
    LpRow row;
    row.a.assign(nvars, 0.0);
    for (size_t k = 0; k <= own_types[t].size(); ++k) row.a[qbase[t] + k] = 1.0;
    row.rel = 'E';
    row.rhs = 1.0;
    lp_rows.push_back(std::move(row));
  }
  for (size_t t2 = 0; t2 < opp_types.size(); ++t2) {
    std::vector<int> opp_actions = opp_types[t2];
    opp_actions.push_back(-1);
    for (int a2 : opp_actions) {
      LpRow row;
      row.a.assign(nvars, 0.0);
      row.a[wbase + t2] = 1.0;
      for (const auto& [t1, p] : joint_by_opp[t2]) {
        const auto& acts = own_types[t1];
        for (size_t k = 0; k < acts.size(); ++k)
          row.a[qbase[t1] + k] -= p * payoff(acts[k], a2);
        row.a[qbase[t1] + acts.size()] -= p * payoff(-1, a2);
      }
      row.rel = 'L';
      row.rhs = 0.0;
      lp_rows.push_back(std::move(row));
    }
  }

  LpSolution sol = solve_lp_max(nvars, c, lp_rows);
  if (strategies) {
    strategies->clear();
    for (size_t t = 0; t < own_types.size(); ++t) {
      std::vector<double> q(own_types[t].size() + 1);
      double sum = 0.0;
      for (size_t k = 0; k < q.size(); ++k) {
        q[k] = std::max(0.0, sol.x[qbase[t] + k]);
        sum += q[k];
      }
      if (sum > 0.0)
        for (auto& v : q) v /= sum;
      strategies->push_back(std::move(q));
    }
  }
  return sol.objective;
}

}  // namespace detail

// Value of the zero-sum Bayesian game in which the given agent occupies the
// winner role (which_game = 1 means agent 1 is the desired winner).  Both
// sides are solved as maximin LPs; the pair must reconstitute a unit of
// probability, which doubles as a numerical cross-check.
inline BayesSolution solve_bayes_value(const Ckddg& b, const Policy& m,
                                       int which_game) {
  auto profile = bayes_type_profile(b, which_game == 1 ? 1 : 2);
  if (which_game != 1 && which_game != 2)
    throw InputError("which_game must be 1 or 2");
  {
    auto violations = validate(m);
    if (!violations.empty())
      throw InputError("invalid policy: " + violations.front());
  }
  auto rmap = detail::policy_axis_map(b.actions, m.row_actions, "rows");
  auto cmap = detail::policy_axis_map(b.actions, m.col_actions, "cols");
  const int drow = m.default_row(), dcol = m.default_col();
  auto favor1 = [&](int a1, int a2) {
    return m.p1(a1 < 0 ? drow : rmap[a1], a2 < 0 ? dcol : cmap[a2]);
  };
  auto favor2 = [&](int a2, int a1) { return 1.0 - favor1(a1, a2); };

  auto setup = detail::make_setup(profile);
  BayesSolution out;
  out.types1 = setup.types1;
  out.types2 = setup.types2;
  out.value1 = detail::bayes_side_lp(setup.types1, setup.types2,
                                     setup.joint_by_t2, favor1, &out.strategy1);
  out.value2 = detail::bayes_side_lp(setup.types2, setup.types1,
                                     setup.joint_by_t1, favor2, &out.strategy2);
  if (std::abs(out.value1 + out.value2 - 1.0) > 1e-7)
    throw Error("bayes game values failed the zero-sum cross-check: " +
                fmt17(out.value1) + " + " + fmt17(out.value2));
  return out;
}

}  // namespace debate

#endif  // DEBATE_BAYES_HPP
