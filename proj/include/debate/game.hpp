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
// Core data model: debate games in three flavors and the principal's policy.
//
// The default action is implicit everywhere.  It never appears in an action
// set or an availability set; it only surfaces as the last row/column of a
// policy matrix and as the reserved file token "__default__".

#ifndef DEBATE_GAME_HPP
#define DEBATE_GAME_HPP

#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "debate/common.hpp"

namespace debate {

using ActionLabel = std::string;

inline constexpr const char* kDefaultToken = "__default__";
inline constexpr double kProbSumTol = 1e-9;

// One state of the world in a game with named sides.
struct CkdgScenario {
  std::string id;
  double prob = 0.0;
  std::vector<ActionLabel> avail1, avail2;  // subsets of actions1/actions2
  double u1 = 0.0, u2 = 0.0;                // principal's utility per winner
};

// Debate game where both agents see each other's available actions.
struct Ckdg {
  std::vector<ActionLabel> actions1, actions2;
  std::vector<CkdgScenario> scenarios;
};

enum class GameKind { kCommonKnowledge, kPrivateInformation };

// Anonymized scenario: winner/loser are roles, not agent identities.
struct DistinguishingScenario {
  std::string id;
  double prob = 0.0;
  std::vector<ActionLabel> avail_winner, avail_loser;  // subsets of actions
};

// Distinguishing debate game over a single shared action set.  The same
// shape serves both the common-knowledge and the private-information
// semantics; `kind` selects which error notion applies.
struct Ckddg {
  std::vector<ActionLabel> actions;
  std::vector<DistinguishingScenario> scenarios;
  GameKind kind = GameKind::kCommonKnowledge;
};

// The principal's commitment: p1(r, c) is the probability of favoring
// agent 1 when agent 1 plays row r and agent 2 plays column c.  Agent 2's
// share is 1 - p1 and is never stored.  The last row/column is the default
// action; row_actions/col_actions list only the named actions.
struct Policy {
  std::vector<ActionLabel> row_actions, col_actions;
  Matrix p1;  // (row_actions+1) x (col_actions+1)

  int default_row() const { return static_cast<int>(row_actions.size()); }
  int default_col() const { return static_cast<int>(col_actions.size()); }
};

inline Policy constant_policy(const std::vector<ActionLabel>& rows,
                              const std::vector<ActionLabel>& cols,
                              double favor1 = 0.5) {
  Policy p;
  p.row_actions = rows;
  p.col_actions = cols;
  p.p1 = Matrix(static_cast<int>(rows.size()) + 1,
                static_cast<int>(cols.size()) + 1, favor1);
  return p;
}

namespace detail {

inline void check_labels(const std::vector<ActionLabel>& actions,
                         const std::string& which,
                         std::vector<std::string>* out) {
  std::unordered_set<std::string> seen;
  for (const auto& a : actions) {
    if (a.empty()) out->push_back(which + ": empty action label");
    if (a == kDefaultToken)
      out->push_back(which + ": reserved label " + std::string(kDefaultToken));
    if (!seen.insert(a).second)
      out->push_back(which + ": duplicate action label '" + a + "'");
  }
}

inline void check_avail(const std::vector<ActionLabel>& avail,
                        const std::unordered_set<std::string>& known,
                        const std::string& where,
                        std::vector<std::string>* out) {
  std::unordered_set<std::string> seen;
  for (const auto& a : avail) {
    if (!known.count(a))
      out->push_back(where + ": unknown action '" + a + "'");
    if (!seen.insert(a).second)
      out->push_back(where + ": duplicate action '" + a + "'");
  }
}

inline void check_prob_sum(double sum, std::vector<std::string>* out) {
  if (std::abs(sum - 1.0) > kProbSumTol)
    out->push_back("scenario probabilities sum to " + fmt17(sum) +
                   ", expected 1 within " + fmt17(kProbSumTol));
}

inline void check_scenario_ids(const std::vector<std::string>& ids,
                               std::vector<std::string>* out) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (id.empty()) out->push_back("scenario with empty id");
    if (!seen.insert(id).second)
      out->push_back("duplicate scenario id '" + id + "'");
  }
}

}  // namespace detail

// Violations are data, not failures: an empty list means the game is valid.
inline std::vector<std::string> validate(const Ckdg& g) {
  std::vector<std::string> out;
  detail::check_labels(g.actions1, "actions1", &out);
  detail::check_labels(g.actions2, "actions2", &out);
  std::unordered_set<std::string> known1(g.actions1.begin(), g.actions1.end());
  std::unordered_set<std::string> known2(g.actions2.begin(), g.actions2.end());
  std::vector<std::string> ids;
  double sum = 0.0;
  for (const auto& s : g.scenarios) {
    ids.push_back(s.id);
    if (!(s.prob >= 0.0) || !(s.prob <= 1.0))
      out.push_back("scenario '" + s.id + "': prob " + fmt17(s.prob) +
                    " outside [0,1]");
    sum += s.prob;
    detail::check_avail(s.avail1, known1, "scenario '" + s.id + "' avail1", &out);
    detail::check_avail(s.avail2, known2, "scenario '" + s.id + "' avail2", &out);
    if (!std::isfinite(s.u1) || !std::isfinite(s.u2))
      out.push_back("scenario '" + s.id + "': non-finite utility");
  }
  detail::check_scenario_ids(ids, &out);
  detail::check_prob_sum(sum, &out);
  return out;
}

inline std::vector<std::string> validate(const Ckddg& g) {
  std::vector<std::string> out;
  detail::check_labels(g.actions, "actions", &out);
  std::unordered_set<std::string> known(g.actions.begin(), g.actions.end());
  std::vector<std::string> ids;
  double sum = 0.0;
  for (const auto& s : g.scenarios) {
    ids.push_back(s.id);
    if (!(s.prob >= 0.0) || !(s.prob <= 1.0))
      out.push_back("scenario '" + s.id + "': prob " + fmt17(s.prob) +
                    " outside [0,1]");
    sum += s.prob;
    detail::check_avail(s.avail_winner, known,
                        "scenario '" + s.id + "' availWinner", &out);
    detail::check_avail(s.avail_loser, known,
                        "scenario '" + s.id + "' availLoser", &out);
  }
  detail::check_scenario_ids(ids, &out);
  detail::check_prob_sum(sum, &out);
  return out;
}

inline std::vector<std::string> validate(const Policy& p) {
  std::vector<std::string> out;
  detail::check_labels(p.row_actions, "policy rows", &out);
  detail::check_labels(p.col_actions, "policy cols", &out);
  if (p.p1.rows() != static_cast<int>(p.row_actions.size()) + 1 ||
      p.p1.cols() != static_cast<int>(p.col_actions.size()) + 1)
    out.push_back("policy matrix shape does not match action lists");
  for (int r = 0; r < p.p1.rows(); ++r)
    for (int c = 0; c < p.p1.cols(); ++c) {
      double v = p.p1(r, c);
      if (!(v >= 0.0) || !(v <= 1.0))
        out.push_back("policy entry (" + std::to_string(r) + "," +
                      std::to_string(c) + ") = " + fmt17(v) + " outside [0,1]");
    }
  return out;
}

inline void require_valid(const Ckdg& g) {
  auto v = validate(g);
  if (!v.empty()) throw InputError("invalid game: " + v.front());
}

inline void require_valid(const Ckddg& g) {
  auto v = validate(g);
  if (!v.empty()) throw InputError("invalid game: " + v.front());
}

// Expands an anonymized game into the induced two-sided game.  Each
// scenario s becomes ("1:"+id, "2:"+id) in that order, with probability
// halved: in "i:"+id agent i holds the winner availability and is the
// desired winner (utility 1 versus 0).
inline Ckdg unfurl(const Ckddg& b) {
  require_valid(b);
  Ckdg g;
  g.actions1 = b.actions;
  g.actions2 = b.actions;
  g.scenarios.reserve(2 * b.scenarios.size());
  for (const auto& s : b.scenarios) {
    CkdgScenario s1;
    s1.id = "1:" + s.id;
    s1.prob = 0.5 * s.prob;
    s1.avail1 = s.avail_winner;
    s1.avail2 = s.avail_loser;
    s1.u1 = 1.0;
    s1.u2 = 0.0;
    g.scenarios.push_back(std::move(s1));
    CkdgScenario s2;
    s2.id = "2:" + s.id;
    s2.prob = 0.5 * s.prob;
    s2.avail1 = s.avail_loser;
    s2.avail2 = s.avail_winner;
    s2.u1 = 0.0;
    s2.u2 = 1.0;
    g.scenarios.push_back(std::move(s2));
  }
  return g;
}

namespace detail {

inline std::unordered_map<std::string, int> index_of(
    const std::vector<ActionLabel>& labels) {
  std::unordered_map<std::string, int> m;
  m.reserve(labels.size());
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) m[labels[i]] = i;
  return m;
}

// Maps game-axis action indices onto policy-axis indices.  The label sets
// must coincide exactly; order may differ.
inline std::vector<int> policy_axis_map(const std::vector<ActionLabel>& game_axis,
                                        const std::vector<ActionLabel>& policy_axis,
                                        const char* which) {
  if (game_axis.size() != policy_axis.size())
    throw InputError(std::string("policy ") + which +
                     " do not match the game's action set");
  auto idx = index_of(policy_axis);
  std::vector<int> map(game_axis.size());
  for (size_t i = 0; i < game_axis.size(); ++i) {
    auto it = idx.find(game_axis[i]);
    if (it == idx.end())
      throw InputError(std::string("policy ") + which + " missing action '" +
                       game_axis[i] + "'");
    map[i] = it->second;
  }
  return map;
}

}  // namespace detail

}  // namespace debate

#endif  // DEBATE_GAME_HPP
