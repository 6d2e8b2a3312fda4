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
// Constructive reductions between CNF formulas and debate games.
//
// From a formula with n variables and m clauses we build a game where
// agent 1 argues variable values and agent 2 argues clause literals.  In
// variable scenario k agent 1 (the desired winner) holds both value claims
// for variable k while agent 2 holds every clause's claim on k; in clause
// scenario k agent 2 (the desired winner) holds clause k's literals while
// agent 1 holds the claims refuting them.  A perfect policy exists exactly
// when the formula is satisfiable.

#ifndef DEBATE_REDUCER_HPP
#define DEBATE_REDUCER_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "debate/error_eval.hpp"
#include "debate/game.hpp"

namespace debate {

struct Literal {
  int var = 0;           // 1-based
  bool negated = false;  // true for a DIMACS negative literal
};

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;
};

inline bool satisfies(const Cnf& f, const std::vector<bool>& x) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (const auto& lit : clause)
      if (x[lit.var - 1] != lit.negated) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

// Preconditions for the reduction: at least one clause, no duplicate
// clauses, each clause on at least two distinct variables.  Violations are
// rejected rather than repaired.
inline void check_reduction_preconditions(const Cnf& f) {
  if (f.num_vars < 1) throw InputError("formula must have at least one variable");
  if (f.clauses.empty()) throw InputError("formula must have at least one clause");
  std::set<std::set<std::pair<int, bool>>> seen;
  for (size_t i = 0; i < f.clauses.size(); ++i) {
    std::set<std::pair<int, bool>> lits;
    std::set<int> vars;
    for (const auto& lit : f.clauses[i]) {
      if (lit.var < 1 || lit.var > f.num_vars)
        throw InputError("clause " + std::to_string(i + 1) +
                         " references variable " + std::to_string(lit.var) +
                         " outside 1.." + std::to_string(f.num_vars));
      if (vars.count(lit.var) && !lits.count({lit.var, lit.negated}))
        throw InputError("clause " + std::to_string(i + 1) +
                         " uses variable " + std::to_string(lit.var) +
                         " with both polarities");
      lits.insert({lit.var, lit.negated});
      vars.insert(lit.var);
    }
    if (vars.size() < 2)
      throw InputError("clause " + std::to_string(i + 1) +
                       " references fewer than two distinct variables");
    if (!seen.insert(lits).second)
      throw InputError("duplicate clause " + std::to_string(i + 1));
  }
}

// DIMACS CNF, with duplicate literals inside a clause deduplicated and the
// reduction preconditions enforced.
inline Cnf parse_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Cnf f;
  bool have_header = false;
  std::vector<Literal> clause;
  std::set<std::pair<int, bool>> clause_seen;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hdr(line);
      std::string p, fmt;
      int nv = 0, nc = 0;
      if (!(hdr >> p >> fmt >> nv >> nc) || fmt != "cnf")
        throw IoError(path + ": malformed problem line '" + line + "'");
      f.num_vars = nv;
      have_header = true;
      continue;
    }
    std::istringstream body(line);
    long lit;
    while (body >> lit) {
      if (lit == 0) {
        f.clauses.push_back(clause);
        clause.clear();
        clause_seen.clear();
      } else {
        Literal l{static_cast<int>(std::abs(lit)), lit < 0};
        if (clause_seen.insert({l.var, l.negated}).second) clause.push_back(l);
      }
    }
    if (body.fail() && !body.eof())
      throw IoError(path + ": unreadable literal in '" + line + "'");
  }
  if (!have_header) throw IoError(path + ": missing 'p cnf' header");
  if (!clause.empty()) f.clauses.push_back(clause);
  check_reduction_preconditions(f);
  return f;
}

namespace detail {

inline ActionLabel value_action(int var, bool value) {
  return "v" + std::to_string(var) + (value ? ":T" : ":F");
}

inline ActionLabel clause_action(int clause, int var) {
  return "c" + std::to_string(clause) + ":v" + std::to_string(var);
}

// Value of variable `lit.var` that makes the literal true.
inline bool satisfying_value(const Literal& lit) { return !lit.negated; }

}  // namespace detail

inline Ckdg sat_to_ckdg(const Cnf& f) {
  check_reduction_preconditions(f);
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  Ckdg g;
  for (int j = 1; j <= n; ++j) {
    g.actions1.push_back(detail::value_action(j, false));
    g.actions1.push_back(detail::value_action(j, true));
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      g.actions2.push_back(detail::clause_action(i, j));

  const double prob = 1.0 / (n + m);
  for (int k = 1; k <= n; ++k) {
    CkdgScenario s;
    s.id = "var:" + std::to_string(k);
    s.prob = prob;
    s.avail1 = {detail::value_action(k, false), detail::value_action(k, true)};
    for (int i = 1; i <= m; ++i) s.avail2.push_back(detail::clause_action(i, k));
    s.u1 = 1.0;
    s.u2 = 0.0;
    g.scenarios.push_back(std::move(s));
  }
  for (int k = 1; k <= m; ++k) {
    CkdgScenario s;
    s.id = "clause:" + std::to_string(k);
    s.prob = prob;
    for (const auto& lit : f.clauses[k - 1]) {
      s.avail1.push_back(detail::value_action(lit.var, !detail::satisfying_value(lit)));
      s.avail2.push_back(detail::clause_action(k, lit.var));
    }
    s.u1 = 0.0;
    s.u2 = 1.0;
    g.scenarios.push_back(std::move(s));
  }
  return g;
}

// Certificate direction: a satisfying assignment yields a zero-error policy.
// Agent 1 is favored exactly when it plays a claim consistent with the
// assignment against either a clause action on the same variable or the
// default action; every other cell favors agent 2.
inline Policy assignment_to_policy(const Cnf& f, const std::vector<bool>& x) {
  check_reduction_preconditions(f);
  if (static_cast<int>(x.size()) != f.num_vars)
    throw InputError("assignment length does not match variable count");
  if (!satisfies(f, x)) throw InputError("assignment does not satisfy the formula");
  Ckdg g = sat_to_ckdg(f);
  Policy p = constant_policy(g.actions1, g.actions2, 0.0);
  const int m = static_cast<int>(f.clauses.size());
  for (int j = 1; j <= f.num_vars; ++j) {
    int row = 2 * (j - 1) + (x[j - 1] ? 1 : 0);
    for (int i = 1; i <= m; ++i)
      p.p1(row, (i - 1) * f.num_vars + (j - 1)) = 1.0;
    p.p1(row, p.default_col()) = 1.0;
  }
  return p;
}

// Witness direction: a zero-error policy for the reduced game induces a
// satisfying assignment, read off the winner's unbeatable action in each
// variable scenario (an unconstrained variable defaults to true).
inline std::optional<std::vector<bool>> policy_to_assignment(const Cnf& f,
                                                             const Policy& m) {
  Ckdg g = sat_to_ckdg(f);
  if (eval_ckdg(g, m).total > 1e-9) return std::nullopt;
  auto rmap = detail::policy_axis_map(g.actions1, m.row_actions, "rows");
  auto cmap = detail::policy_axis_map(g.actions2, m.col_actions, "cols");
  const int nvars = f.num_vars, nclauses = static_cast<int>(f.clauses.size());
  std::vector<bool> x(nvars, true);
  for (int k = 1; k <= nvars; ++k) {
    bool found = false;
    for (int value = 0; value < 2 && !found; ++value) {
      int row = rmap[2 * (k - 1) + value];
      bool all_win = m.p1(row, m.default_col()) >= 1.0 - 1e-6;
      for (int i = 1; i <= nclauses && all_win; ++i)
        all_win = m.p1(row, cmap[(i - 1) * nvars + (k - 1)]) >= 1.0 - 1e-6;
      if (all_win) {
        x[k - 1] = value == 1;
        found = true;
      }
    }
    // Not finding a value row means the winner's unbeatable action was the
    // default one; the variable stays at its arbitrary value.
  }
  return x;
}

// Returned instead of a game when no scenario ever matters.
struct EveryPolicyPerfect {};

namespace detail {

inline ActionLabel tagged(int agent, const ActionLabel& a) {
  return std::to_string(agent) + ":" + a;
}

inline ActionLabel tagged_default(int agent) {
  return std::to_string(agent) + ":__d__";
}

}  // namespace detail

// Collapses a two-sided game into an anonymized one over the tagged action
// set {1,2} x (own actions + own default).  Scenarios that are impossible
// or indifferent are dropped; the rest get uniform probability, with the
// winner/loser roles assigned by the sign of u1 - u2.  Each agent's former
// default becomes an ordinary tagged action; the new game has a fresh
// implicit default.
inline std::variant<Ckddg, EveryPolicyPerfect> ckdg_to_ckddg(const Ckdg& g) {
  require_valid(g);
  std::vector<const CkdgScenario*> live;
  for (const auto& s : g.scenarios)
    if (s.prob > 0.0 && s.u1 != s.u2) live.push_back(&s);
  if (live.empty()) return EveryPolicyPerfect{};

  Ckddg b;
  b.kind = GameKind::kCommonKnowledge;
  for (const auto& a : g.actions1) b.actions.push_back(detail::tagged(1, a));
  b.actions.push_back(detail::tagged_default(1));
  for (const auto& a : g.actions2) b.actions.push_back(detail::tagged(2, a));
  b.actions.push_back(detail::tagged_default(2));

  const double prob = 1.0 / live.size();
  for (const auto* s : live) {
    DistinguishingScenario d;
    d.id = s->id;
    d.prob = prob;
    std::vector<ActionLabel> side1, side2;
    for (const auto& a : s->avail1) side1.push_back(detail::tagged(1, a));
    side1.push_back(detail::tagged_default(1));
    for (const auto& a : s->avail2) side2.push_back(detail::tagged(2, a));
    side2.push_back(detail::tagged_default(2));
    if (s->u1 > s->u2) {
      d.avail_winner = std::move(side1);
      d.avail_loser = std::move(side2);
    } else {
      d.avail_winner = std::move(side2);
      d.avail_loser = std::move(side1);
    }
    b.scenarios.push_back(std::move(d));
  }
  return b;
}

// Policy transfer onto the tagged game: within-side cells split evenly,
// cross-side cells replay the original policy, and any tagged action beats
// the fresh default.  Perfection is preserved.
inline Policy lift_policy(const Ckdg& g, const Policy& m) {
  auto rmap = detail::policy_axis_map(g.actions1, m.row_actions, "rows");
  auto cmap = detail::policy_axis_map(g.actions2, m.col_actions, "cols");
  const int n1 = static_cast<int>(g.actions1.size());
  const int n2 = static_cast<int>(g.actions2.size());
  std::vector<ActionLabel> actions;
  for (const auto& a : g.actions1) actions.push_back(detail::tagged(1, a));
  actions.push_back(detail::tagged_default(1));
  for (const auto& a : g.actions2) actions.push_back(detail::tagged(2, a));
  actions.push_back(detail::tagged_default(2));

  // Index i in [0, n1] is side 1 (n1 = old default); [n1+1, n1+1+n2] side 2.
  auto favor1 = [&](int a1, int a2) {
    return m.p1(a1 == n1 ? m.default_row() : rmap[a1],
                a2 == n2 ? m.default_col() : cmap[a2]);
  };
  const int total = n1 + n2 + 2;
  Policy p = constant_policy(actions, actions, 0.5);
  for (int i = 0; i < total; ++i) {
    const bool i_side1 = i <= n1;
    for (int j = 0; j < total; ++j) {
      const bool j_side1 = j <= n1;
      if (i_side1 && !j_side1)
        p.p1(i, j) = favor1(i, j - n1 - 1);
      else if (!i_side1 && j_side1)
        p.p1(i, j) = 1.0 - favor1(j, i - n1 - 1);
      else
        p.p1(i, j) = 0.5;  // same side
    }
    p.p1(i, total) = 1.0;  // tagged action vs fresh default
    p.p1(total, i) = 0.0;
  }
  p.p1(total, total) = 0.5;
  return p;
}

// Inverse transfer: recovers a two-sided policy from a perfect policy on the
// tagged game, again preserving perfection.  Cross-side cells are copied;
// a default-versus-action cell takes the better (for the acting side) of
// the two ways the default could be played; the default-versus-default cell
// goes to whichever side never needs its default to win.
inline Policy project_policy(const Ckdg& g, const Policy& mp) {
  auto reduced = ckdg_to_ckddg(g);
  if (std::holds_alternative<EveryPolicyPerfect>(reduced))
    throw InputError("game has no relevant scenarios to project through");
  const Ckddg& b = std::get<Ckddg>(reduced);
  Ckdg unf = unfurl(b);
  if (eval_ckdg(unf, mp).total > 1e-9)
    throw InputError("project_policy requires a perfect tagged-game policy");

  auto amap = detail::policy_axis_map(b.actions, mp.row_actions, "rows");
  auto cmap2 = detail::policy_axis_map(b.actions, mp.col_actions, "cols");
  const int n1 = static_cast<int>(g.actions1.size());
  auto favor1 = [&](int i, int j) {  // tagged indices; -1 is the fresh default
    return mp.p1(i < 0 ? mp.default_row() : amap[i],
                 j < 0 ? mp.default_col() : cmap2[j]);
  };

  // For each live scenario, find a winner action that beats everything the
  // loser can play, looking at the de-anonymization whose winning agent
  // index matches the winning side; record whether that side ever relies on
  // a default-like action.
  auto idx = detail::index_of(b.actions);
  bool side_needs_default[3] = {false, false, false};
  for (const auto& s : b.scenarios) {
    const int winner_side = s.avail_winner.front()[0] == '1' ? 1 : 2;
    const int orient = winner_side;
    int chosen = -2;
    for (const auto& wa : s.avail_winner) {
      int wi = idx.at(wa);
      bool wins = true;
      for (const auto& la : s.avail_loser) {
        int li = idx.at(la);
        double v = orient == 1 ? favor1(wi, li) : 1.0 - favor1(li, wi);
        if (v < 1.0 - 1e-6) {
          wins = false;
          break;
        }
      }
      double vs_default = orient == 1 ? favor1(wi, -1) : 1.0 - favor1(-1, wi);
      if (wins && vs_default >= 1.0 - 1e-6) {
        chosen = wi;
        break;
      }
    }
    if (chosen == -2) {
      // Only the fresh default can have been the perfect action.
      side_needs_default[winner_side] = true;
    } else {
      const ActionLabel& label = b.actions[chosen];
      if (label == detail::tagged_default(1) || label == detail::tagged_default(2))
        side_needs_default[winner_side] = true;
    }
  }
  int j_side = side_needs_default[1] ? 2 : 1;  // side that never needs it
  if (side_needs_default[1] && side_needs_default[2])
    throw Error("projection found default reliance on both sides");

  Policy p = constant_policy(g.actions1, g.actions2, 0.5);
  const int d1 = n1;  // tagged index of side 1's old default
  const int d2 = n1 + 1 + static_cast<int>(g.actions2.size());
  auto tag1 = [&](int a1) { return a1 < 0 ? d1 : a1; };
  auto tag2 = [&](int a2) { return a2 < 0 ? d2 : n1 + 1 + a2; };
  for (int a1 = -1; a1 < static_cast<int>(g.actions1.size()); ++a1) {
    for (int a2 = -1; a2 < static_cast<int>(g.actions2.size()); ++a2) {
      double v;
      if (a1 >= 0 && a2 >= 0) {
        v = favor1(tag1(a1), tag2(a2));
      } else if (a1 < 0 && a2 >= 0) {
        v = std::max(favor1(d1, tag2(a2)), favor1(-1, tag2(a2)));
      } else if (a1 >= 0 && a2 < 0) {
        v = std::min(favor1(tag1(a1), d2), favor1(tag1(a1), -1));
      } else {
        v = j_side == 1 ? 0.0 : 1.0;
      }
      p.p1(a1 < 0 ? p.default_row() : a1, a2 < 0 ? p.default_col() : a2) = v;
    }
  }
  return p;
}

}  // namespace debate

#endif  // DEBATE_REDUCER_HPP
