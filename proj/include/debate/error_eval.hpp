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
// Exact policy-error evaluation for all three game classes.  The error is
// the expected utility the principal loses to the desired loser winning:
// per scenario, the desired loser's value of the zero-sum game restricted
// to available actions plus the default, weighted by prob * |u1 - u2|.

#ifndef DEBATE_ERROR_EVAL_HPP
#define DEBATE_ERROR_EVAL_HPP

#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "debate/bayes.hpp"
#include "debate/game.hpp"
#include "debate/matrix_game.hpp"

namespace debate {

struct ErrorReport {
  double total = 0.0;
  struct ScenarioTerm {
    std::string id;
    double loser_win = 0.0;  // desired loser's win probability
    double weight = 0.0;     // multiplier on loser_win in the total
  };
  // One term per contributing scenario, in scenario order.  Scenarios with
  // zero probability or indifferent utilities contribute nothing and are
  // omitted.  Empty for private-information games, whose error does not
  // decompose by scenario.
  std::vector<ScenarioTerm> per_scenario;
};

namespace detail {

struct PolicyOnGame {
  const Policy* policy;
  std::vector<int> row_map, col_map;  // game action index -> policy index
  int drow, dcol;

  double favor1(int a1, int a2) const {  // -1 encodes the default action
    return policy->p1(a1 < 0 ? drow : row_map[a1], a2 < 0 ? dcol : col_map[a2]);
  }
};

inline PolicyOnGame bind_policy(const Ckdg& g, const Policy& m) {
  auto violations = validate(m);
  if (!violations.empty())
    throw InputError("invalid policy: " + violations.front());
  PolicyOnGame b;
  b.policy = &m;
  b.row_map = policy_axis_map(g.actions1, m.row_actions, "rows");
  b.col_map = policy_axis_map(g.actions2, m.col_actions, "cols");
  b.drow = m.default_row();
  b.dcol = m.default_col();
  return b;
}

// Desired loser's win probability in one scenario, computed as the value of
// the loser's own payoff matrix with the loser as row player.
inline double loser_value(const PolicyOnGame& pg, const CkdgScenario& s,
                          const std::unordered_map<std::string, int>& idx1,
                          const std::unordered_map<std::string, int>& idx2,
                          MatrixGameSolver* solver) {
  std::vector<int> a1, a2;  // -1 is the default action
  a1.reserve(s.avail1.size() + 1);
  a2.reserve(s.avail2.size() + 1);
  for (const auto& a : s.avail1) a1.push_back(idx1.at(a));
  a1.push_back(-1);
  for (const auto& a : s.avail2) a2.push_back(idx2.at(a));
  a2.push_back(-1);

  const bool loser_is_agent2 = s.u1 > s.u2;
  if (loser_is_agent2) {
    Matrix payoff(static_cast<int>(a2.size()), static_cast<int>(a1.size()));
    for (size_t r = 0; r < a2.size(); ++r)
      for (size_t c = 0; c < a1.size(); ++c)
        payoff(static_cast<int>(r), static_cast<int>(c)) =
            1.0 - pg.favor1(a1[c], a2[r]);
    return solver->value(payoff);
  }
  Matrix payoff(static_cast<int>(a1.size()), static_cast<int>(a2.size()));
  for (size_t r = 0; r < a1.size(); ++r)
    for (size_t c = 0; c < a2.size(); ++c)
      payoff(static_cast<int>(r), static_cast<int>(c)) = pg.favor1(a1[r], a2[c]);
  return solver->value(payoff);
}

}  // namespace detail

inline ErrorReport eval_ckdg(const Ckdg& g, const Policy& m, int threads = 1) {
  require_valid(g);
  auto pg = detail::bind_policy(g, m);
  auto idx1 = detail::index_of(g.actions1);
  auto idx2 = detail::index_of(g.actions2);

  std::vector<int> active;
  for (int i = 0; i < static_cast<int>(g.scenarios.size()); ++i) {
    const auto& s = g.scenarios[i];
    if (s.prob > 0.0 && s.u1 != s.u2) active.push_back(i);
  }

  std::vector<double> values(active.size());
  parallel_for(static_cast<int>(active.size()), threads, [&](int k) {
    thread_local MatrixGameSolver solver;
    values[k] = detail::loser_value(pg, g.scenarios[active[k]], idx1, idx2, &solver);
  });

  ErrorReport report;
  for (size_t k = 0; k < active.size(); ++k) {
    const auto& s = g.scenarios[active[k]];
    double weight = s.prob * std::abs(s.u1 - s.u2);
    report.per_scenario.push_back({s.id, values[k], weight});
    report.total += values[k] * weight;
  }
  return report;
}

// Common-knowledge distinguishing error: evaluate the induced two-sided game
// and report the averaged loser-win probability per anonymized scenario.
inline ErrorReport eval_ckddg(const Ckddg& b, const Policy& m, int threads = 1) {
  if (b.kind != GameKind::kCommonKnowledge)
    throw InputError("eval_ckddg requires a common-knowledge game");
  ErrorReport inner = eval_ckdg(unfurl(b), m, threads);
  std::unordered_map<std::string, const ErrorReport::ScenarioTerm*> by_id;
  for (const auto& t : inner.per_scenario) by_id[t.id] = &t;

  ErrorReport report;
  report.total = inner.total;
  for (const auto& s : b.scenarios) {
    if (s.prob <= 0.0) continue;
    const auto* t1 = by_id.at("1:" + s.id);
    const auto* t2 = by_id.at("2:" + s.id);
    report.per_scenario.push_back(
        {s.id, 0.5 * (t1->loser_win + t2->loser_win), s.prob});
  }
  return report;
}

// Private-information distinguishing error: the average of the desired
// loser's values across the two induced Bayesian games.
inline ErrorReport eval_piddg(const Ckddg& b, const Policy& m) {
  if (b.kind != GameKind::kPrivateInformation)
    throw InputError("eval_piddg requires a private-information game");
  BayesSolution g1 = solve_bayes_value(b, m, 1);
  BayesSolution g2 = solve_bayes_value(b, m, 2);
  ErrorReport report;
  report.total = 0.5 * (g2.value1 + g1.value2);
  return report;
}

// Dispatch on the kind tag.
inline ErrorReport eval_distinguishing(const Ckddg& b, const Policy& m,
                                       int threads = 1) {
  return b.kind == GameKind::kCommonKnowledge ? eval_ckddg(b, m, threads)
                                              : eval_piddg(b, m);
}

}  // namespace debate

#endif  // DEBATE_ERROR_EVAL_HPP
