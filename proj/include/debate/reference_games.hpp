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
// Bundled reference instances with known error values, plus the canned
// replication cases exposed by the CLI.

#ifndef DEBATE_REFERENCE_GAMES_HPP
#define DEBATE_REFERENCE_GAMES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "debate/bounds.hpp"
#include "debate/error_eval.hpp"
#include "debate/mc.hpp"
#include "debate/perfect.hpp"
#include "debate/sampler.hpp"

namespace debate {

// Three actions, three equally likely scenarios; in scenario s the desired
// winner holds only the action beating s cyclically while the loser holds s
// itself.  Admits a zero-error policy under either semantics.
inline Ckddg cyclic_game(GameKind kind = GameKind::kCommonKnowledge) {
  Ckddg b;
  b.kind = kind;
  b.actions = {"0", "1", "2"};
  for (int s = 0; s < 3; ++s) {
    DistinguishingScenario d;
    d.id = std::to_string(s);
    d.prob = 1.0 / 3.0;
    d.avail_winner = {std::to_string((s + 1) % 3)};
    d.avail_loser = {std::to_string(s)};
    b.scenarios.push_back(std::move(d));
  }
  return b;
}

// Same prior, but the desired winner now holds every action and so cannot
// tell which scenario it is in; under private information the error floor
// n/(2m) = 1/6 binds for every policy.
inline Ckddg cyclic_game_blind_winner() {
  Ckddg b = cyclic_game(GameKind::kPrivateInformation);
  for (auto& s : b.scenarios) s.avail_winner = {"0", "1", "2"};
  return b;
}

// Zero-error policy for cyclic_game: each action beats its cyclic
// predecessor and the default, mirrors tie at 1/2.
inline Policy cyclic_policy() {
  std::vector<ActionLabel> a = {"0", "1", "2"};
  Policy p = constant_policy(a, a, 0.5);
  for (int i = 0; i < 3; ++i) {
    p.p1(i, (i + 2) % 3) = 1.0;  // beats predecessor
    p.p1(i, (i + 1) % 3) = 0.0;
    p.p1(i, 3) = 1.0;  // action beats default
    p.p1(3, i) = 0.0;
  }
  return p;
}

// Five-scenario game on four actions whose best policy is strictly better
// than every binary-valued one: probabilities 0.3/0.3/0.3/0.06/0.04 with a
// cyclic core, one scenario where the loser strictly dominates the winner's
// set, and one where the winner holds only the extra action.
inline Ckddg nonbinary_advantage_game() {
  Ckddg b;
  b.kind = GameKind::kCommonKnowledge;
  b.actions = {"0", "1", "2", "3"};
  auto add = [&](const std::string& id, double prob,
                 std::vector<ActionLabel> w, std::vector<ActionLabel> l) {
    b.scenarios.push_back({id, prob, std::move(w), std::move(l)});
  };
  for (int s = 0; s < 3; ++s)
    add(std::to_string(s), 0.3, {std::to_string((s + 1) % 3)}, {std::to_string(s)});
  add("3", 0.06, {"0", "1", "2"}, {"0", "1", "2", "3"});
  add("4", 0.04, {"3"}, {"0", "1", "2"});
  return b;
}

// Four-scenario sibling used for the mixed-strategy comparison: same core,
// scenario 3 keeps probability 0.1 and there is no fifth scenario.
inline Ckddg mixed_incentive_game() {
  Ckddg b;
  b.kind = GameKind::kCommonKnowledge;
  b.actions = {"0", "1", "2", "3"};
  for (int s = 0; s < 3; ++s)
    b.scenarios.push_back({std::to_string(s), 0.3,
                           {std::to_string((s + 1) % 3)},
                           {std::to_string(s)}});
  b.scenarios.push_back({"3", 0.1, {"0", "1", "2"}, {"0", "1", "2", "3"}});
  return b;
}

// The randomizing policy achieving error 0.05 on both games above: cyclic
// wins on the core, an even split anywhere action 3 meets the core, actions
// beat the default.
inline Policy reference_nonbinary_policy() {
  std::vector<ActionLabel> a = {"0", "1", "2", "3"};
  Policy p = constant_policy(a, a, 0.5);
  for (int i = 0; i < 3; ++i) {
    p.p1(i, (i + 2) % 3) = 1.0;
    p.p1(i, (i + 1) % 3) = 0.0;
  }
  for (int i = 0; i < 4; ++i) {
    p.p1(i, 4) = 1.0;  // any action beats the default
    p.p1(4, i) = 0.0;
  }
  return p;
}

// The nested-subsets family: actions 1..m, one scenario per n-subset, the
// winner holds everything and the loser holds the subset.  Its minimum
// error under private information is exactly n/(2m) asymptotically tight.
inline Ckddg nested_subset_game(int m, int n,
                                GameKind kind = GameKind::kPrivateInformation) {
  if (n < 1 || m < n) throw InputError("need m >= n >= 1");
  Ckddg b;
  b.kind = kind;
  for (int i = 1; i <= m; ++i) b.actions.push_back(std::to_string(i));
  std::vector<int> comb(n);
  for (int i = 0; i < n; ++i) comb[i] = i;
  long count = 1;
  for (int i = 0; i < n; ++i) count = count * (m - i) / (i + 1);
  const double prob = 1.0 / static_cast<double>(count);
  while (true) {
    DistinguishingScenario d;
    std::string id = "s";
    for (int i = 0; i < n; ++i) {
      id += (i ? "_" : "") + std::to_string(comb[i] + 1);
      d.avail_loser.push_back(std::to_string(comb[i] + 1));
    }
    d.id = id;
    d.prob = prob;
    d.avail_winner = b.actions;
    b.scenarios.push_back(std::move(d));
    int i = n - 1;
    while (i >= 0 && comb[i] == m - n + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Canned replication cases.

struct ReplicationReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;  // one "ok:"/"FAIL:" line per checked number
};

namespace detail {

inline void check(ReplicationReport* r, bool ok, const std::string& what) {
  r->lines.push_back(std::string(ok ? "ok:   " : "FAIL: ") + what);
  r->passed = r->passed && ok;
}

}  // namespace detail

inline ReplicationReport replicate_case(const std::string& name,
                                        int threads = 1) {
  ReplicationReport r;
  r.name = name;
  const Seed kSeed{0xDEBA7E5EEDULL};
  if (name == "prop3_5") {
    Ckddg b = cyclic_game();
    Policy pol = cyclic_policy();
    double e_ck = eval_ckddg(b, pol, threads).total;
    detail::check(&r, std::abs(e_ck) <= 1e-9,
                  "zero-error policy, common knowledge: error = " + fmt17(e_ck));
    Ckddg bp = cyclic_game(GameKind::kPrivateInformation);
    double e_pi = eval_piddg(bp, pol).total;
    detail::check(&r, std::abs(e_pi) <= 1e-9,
                  "zero-error policy, private information: error = " + fmt17(e_pi));
    double floor = piddg_error_floor(3, 1);
    detail::check(&r, floor == 0.5 / 3.0,
                  "error floor for the blinded variant = " + fmt17(floor));
    Ckddg blind = cyclic_game_blind_winner();
    double worst = 1.0;
    double e_half = eval_piddg(blind, constant_policy(blind.actions,
                                                      blind.actions)).total;
    worst = std::min(worst, e_half);
    for (int t = 0; t < 1000; ++t) {
      Seed st = rng::trial_seed(kSeed, t);
      worst = std::min(worst, eval_piddg(blind, sample_ranking_policy(
                                                    blind.actions, st).second)
                                  .total);
      HighlightSpec spec = sample_highlight_spec(blind.actions, 0.7, 1, st);
      worst = std::min(worst, eval_piddg(blind, highlight_policy(
                                                    spec, blind.actions))
                                  .total);
    }
    detail::check(&r, worst >= floor - 1e-7,
                  "2001-policy battery on the blinded variant: min error = " +
                      fmt17(worst) + " >= " + fmt17(floor) + " - 1e-7");
  } else if (name == "prop3_6") {
    Ckddg b = nonbinary_advantage_game();
    double e = eval_ckddg(b, reference_nonbinary_policy(), threads).total;
    detail::check(&r, std::abs(e - 0.05) <= 1e-9,
                  "randomizing policy error = " + fmt17(e));
    auto res = brute_force_min_binary_error(b, std::nullopt, false, threads);
    detail::check(&r, res.min_error >= 0.056 - 1e-9,
                  "exhaustive binary minimum over 2^25 policies = " +
                      fmt17(res.min_error) + " >= 0.056 - 1e-9");
    detail::check(&r, e < res.min_error,
                  "randomizing policy strictly beats every binary policy");
  } else if (name == "prop3_7") {
    Ckddg b = mixed_incentive_game();
    double e = eval_ckddg(b, reference_nonbinary_policy(), threads).total;
    detail::check(&r, std::abs(e - 0.05) <= 1e-9,
                  "randomizing policy error = " + fmt17(e));
  } else if (name == "appendixC") {
    const double ratio = 3596.0 / 7.0;
    double beta = 0.315392 / 70.0;
    detail::check(&r, std::abs(beta - 0.0045056) <= 1e-12,
                  "marking probability alpha / C(8,4) = " + fmt17(beta));
    OptimizeResult opt = optimize_highlight_bound(ratio, 0.0, 3.5e-5);
    detail::check(&r, opt.target_met,
                  "ladder bound " + fmt17(opt.bound) + " <= 3.5e-5 at r = 3596/7");
  } else if (name == "thm5_5_instance") {
    Ckddg b = nested_subset_game(6, 2);
    McReport rep = mc_ranking(b, 10000, kSeed, threads);
    double expect = 2.0 / 8.0;
    detail::check(&r, std::abs(rep.mean - expect) <= 4.0 * rep.std_error,
                  "ranking-family mean " + fmt17(rep.mean) + " within 4se (" +
                      fmt17(4.0 * rep.std_error) + ") of " + fmt17(expect));
    detail::check(&r, std::abs(rep.comparator.bound - expect) <= 1e-12,
                  "analytic family expectation = " + fmt17(rep.comparator.bound));
  } else {
    throw InputError("unknown replication case '" + name + "'");
  }
  return r;
}

inline const std::vector<std::string>& replication_case_names() {
  static const std::vector<std::string> names = {
      "prop3_5", "prop3_6", "prop3_7", "appendixC", "thm5_5_instance"};
  return names;
}

}  // namespace debate

#endif  // DEBATE_REFERENCE_GAMES_HPP
