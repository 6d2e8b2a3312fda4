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
// Acceptance suite: every release-gating check, one pass/fail line each.
// Criterion 2's full 2^25 enumeration runs only with --slow (the default is
// a 2^16 sub-grid smoke run); everything else always runs.  Usage:
//
//   debate_acceptance [--slow] [--only N] [--threads N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "debate/bounds.hpp"
#include "debate/error_eval.hpp"
#include "debate/mc.hpp"
#include "debate/perfect.hpp"
#include "debate/reducer.hpp"
#include "debate/reference_games.hpp"
#include "debate/sampler.hpp"

#include "test_util.hpp"

using namespace debate;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

int g_threads = 0;

// 1. The bundled five-scenario game evaluates to 0.05 under its
//    randomizing policy (tolerance 1e-9).
Check criterion1() {
  Check c;
  double e = eval_ckddg(nonbinary_advantage_game(), reference_nonbinary_policy(),
                        g_threads)
                 .total;
  c.require(std::abs(e - 0.05) <= 1e-9, "error != 0.05");
  c.note("error = " + fmt17(e));
  return c;
}

// 2. No binary-valued policy beats 0.056 on that game.  The slow variant
//    enumerates all 2^25 grid assignments; the smoke variant searches the
//    2^16 assignments of the core sub-grid (rows and columns 0, 1, 2 and
//    the default; the extra action's cells stay at 1/2), whose minimum is
//    pinned at its derived value 0.05: with the fourth action neutralized
//    the family recovers exactly the randomizing policy's error.
Check criterion2(bool slow) {
  Check c;
  Ckddg b = nonbinary_advantage_game();
  if (slow) {
    auto res = brute_force_min_binary_error(b, std::nullopt, false, g_threads);
    c.require(res.min_error >= 0.056 - 1e-9, "binary minimum below 0.056");
    c.require(res.policies_examined == (1ULL << 25), "wrong family size");
    double direct = eval_ckddg(b, res.argmin, g_threads).total;
    c.require(std::abs(direct - res.min_error) <= 1e-9,
              "argmin re-evaluation mismatch");
    c.note("full binary minimum = " + fmt17(res.min_error));
  } else {
    std::vector<GridCell> cells;
    for (int r : {0, 1, 2, 4})
      for (int col : {0, 1, 2, 4}) cells.push_back({r, col});
    auto res = brute_force_min_binary_error(b, cells, false, g_threads);
    c.require(std::abs(res.min_error - 0.05) <= 1e-9,
              "core sub-grid minimum moved from its pinned value 0.05");
    c.note("16-cell core minimum = " + fmt17(res.min_error) +
           " (run with --slow for the full 2^25 enumeration)");
  }
  return c;
}

// 3. The cyclic game's tailored policy is perfect under both semantics,
//    while on the blinded variant the 1/6 floor holds for the even policy
//    and one thousand draws from each random family (tolerance 1e-7).
Check criterion3() {
  Check c;
  double e1 = eval_ckddg(cyclic_game(), cyclic_policy(), g_threads).total;
  c.require(std::abs(e1) <= 1e-9, "not perfect under common knowledge");
  double e2 =
      eval_piddg(cyclic_game(GameKind::kPrivateInformation), cyclic_policy())
          .total;
  c.require(std::abs(e2) <= 1e-9, "not perfect under private information");
  double floor = piddg_error_floor(3, 1);
  c.require(floor == 1.0 / 6.0, "floor != 1/6");

  Ckddg blind = cyclic_game_blind_winner();
  double worst = eval_piddg(blind, constant_policy(blind.actions, blind.actions))
                     .total;
  const Seed seed{0xACCE3};
  std::vector<double> rank_errs(1000), mark_errs(1000);
  parallel_for(1000, g_threads, [&](int t) {
    Seed st = rng::trial_seed(seed, t);
    rank_errs[t] =
        eval_piddg(blind, sample_ranking_policy(blind.actions, st).second).total;
    auto spec = sample_highlight_spec(blind.actions, 0.7, 1, st);
    mark_errs[t] =
        eval_piddg(blind, highlight_policy(spec, blind.actions)).total;
  });
  for (double e : rank_errs) worst = std::min(worst, e);
  for (double e : mark_errs) worst = std::min(worst, e);
  c.require(worst >= 1.0 / 6.0 - 1e-7, "battery dipped below the floor");
  c.note("battery minimum = " + fmt17(worst));
  return c;
}

// 4. The ladder-parameter search reaches 3.5e-5 at ratio 3596/7.
Check criterion4() {
  Check c;
  OptimizeResult res = optimize_highlight_bound(3596.0 / 7.0, 0.0, 3.5e-5);
  c.require(res.target_met && res.bound <= 3.5e-5, "target not met");
  c.require(validate(res.params).empty(), "returned parameters invalid");
  c.note("bound = " + fmt17(res.bound) + " with k = " +
         std::to_string(res.params.mu.size()) + ", l = " +
         std::to_string(res.params.nu.size()));
  return c;
}

// 5. Ranking-family mean on the nested-subset game (6, 2) sits within four
//    standard errors of the exact family expectation 0.25.
Check criterion5() {
  Check c;
  McReport r = mc_ranking(nested_subset_game(6, 2), 10000, Seed{0xACCE5},
                          g_threads);
  c.require(std::abs(r.mean - 0.25) <= 4 * r.std_error,
            "mean strayed from 0.25");
  c.note("mean = " + fmt17(r.mean) + ", 4se = " + fmt17(4 * r.std_error));
  return c;
}

// 6. Highlight-family run on one scenario with 16 winner and 2 loser
//    actions at alpha = 1: the exact-error mean respects the ladder bound,
//    and the dominance surrogate matches its direct-summation expectation
//    within four standard errors.
Check criterion6() {
  Check c;
  Ckddg b;
  b.actions = testing::make_labels("h", 18);
  DistinguishingScenario s;
  s.id = "s";
  s.prob = 1.0;
  for (int i = 0; i < 16; ++i) s.avail_winner.push_back(b.actions[i]);
  s.avail_loser = {b.actions[16], b.actions[17]};
  b.scenarios.push_back(std::move(s));

  McReport r = mc_highlight(b, 1.0, 2, 1000, Seed{0xACCE6}, g_threads);
  c.require(r.comparator.applicable, "comparator not applicable");
  c.require(r.mean - 4 * r.std_error <= r.comparator.bound,
            "mean exceeded the ladder bound");
  double oracle = testing::dominance_expectation(16, 2, 0.5);
  c.require(std::abs(r.surrogate_mean - oracle) <= 4 * r.surrogate_std_error,
            "surrogate mean strayed from the summation oracle");
  c.note("mean = " + fmt17(r.mean) + ", bound = " + fmt17(r.comparator.bound) +
         ", surrogate = " + fmt17(r.surrogate_mean) + " vs oracle " +
         fmt17(oracle));
  return c;
}

// 7. Chernoff tail bounds dominate exact binomial tails for every valid
//    integer cutoff with trials up to 200.
Check criterion7() {
  Check c;
  long checked = 0;
  for (int trials = 1; trials <= 200 && c.ok; ++trials) {
    for (double beta : {0.01, 0.05, 0.1, 0.25, 0.5}) {
      std::vector<double> pmf(trials + 1);
      for (int k = 0; k <= trials; ++k)
        pmf[k] = testing::binom_pmf(trials, beta, k);
      double cdf = 0.0;
      const double bt = beta * trials;
      for (int x = 1; x <= trials && x <= bt; ++x) {
        cdf = 0.0;
        for (int k = 0; k <= x; ++k) cdf += pmf[k];
        if (binomial_lower_tail_bound(trials, beta, x) < cdf - 1e-12) {
          c.require(false, "lower bound beaten at trials=" +
                               std::to_string(trials) + " x=" +
                               std::to_string(x));
          break;
        }
        ++checked;
      }
      for (int y = static_cast<int>(std::ceil(bt)); y <= trials; ++y) {
        double tail = 0.0;
        for (int k = y; k <= trials; ++k) tail += pmf[k];
        if (binomial_upper_tail_bound(trials, beta, y) < tail - 1e-12) {
          c.require(false, "upper bound beaten at trials=" +
                               std::to_string(trials) + " y=" +
                               std::to_string(y));
          break;
        }
        ++checked;
      }
    }
  }
  c.note(std::to_string(checked) + " cutoffs dominated");
  return c;
}

// 8. On 200 random formulas, satisfiability (by assignment enumeration),
//    the two-sided decision, and the anonymized decision all agree, and
//    the produced availability maps are injective.
Check criterion8() {
  Check c;
  std::mt19937_64 rng(0xACCE8);
  int sat_count = 0;
  for (int i = 0; i < 200 && c.ok; ++i) {
    Cnf f = testing::random_cnf(rng, 4, 6);
    bool sat = testing::brute_force_sat(f).has_value();
    sat_count += sat;
    Ckdg g = sat_to_ckdg(f);
    std::set<std::vector<ActionLabel>> seen1, seen2;
    for (const auto& s : g.scenarios) {
      if (!seen1.insert(s.avail1).second || !seen2.insert(s.avail2).second)
        c.require(false, "availability not injective");
    }
    auto direct = decide_perfect(g);
    c.require(direct.has_value() == sat, "two-sided decision != sat");
    auto reduced = ckdg_to_ckddg(g);
    const Ckddg& anon = std::get<Ckddg>(reduced);
    std::set<std::vector<ActionLabel>> wseen, lseen;
    for (const auto& s : anon.scenarios) {
      if (!wseen.insert(s.avail_winner).second ||
          !lseen.insert(s.avail_loser).second)
        c.require(false, "anonymized availability not injective");
    }
    c.require(decide_perfect_ckddg(anon).has_value() == sat,
              "anonymized decision != sat");
  }
  c.note(std::to_string(sat_count) + "/200 formulas satisfiable");
  return c;
}

// 9. Monotonicity: element-wise policy shifts move per-scenario win
//    probabilities the right way; growing the winner's availability never
//    raises the distinguishing error, growing the loser's never lowers it
//    (tolerance 1e-7, 500 perturbation triples).
Check criterion9() {
  Check c;
  std::mt19937_64 rng(0xACCE9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 250 && c.ok; ++i) {
    Ckdg g = testing::random_ckdg(rng, 3, 3, /*allow_ties=*/false);
    Policy p = testing::random_policy(rng, g.actions1, g.actions2);
    Policy raised = p;
    for (int r = 0; r < raised.p1.rows(); ++r)
      for (int col = 0; col < raised.p1.cols(); ++col)
        raised.p1(r, col) = std::min(1.0, raised.p1(r, col) + 0.4 * u(rng));
    auto before = eval_ckdg(g, p);
    auto after = eval_ckdg(g, raised);
    for (size_t k = 0, live = 0; k < g.scenarios.size(); ++k) {
      const auto& s = g.scenarios[k];
      if (!(s.prob > 0.0) || s.u1 == s.u2) continue;
      double w0 = before.per_scenario[live].loser_win;
      double w1 = after.per_scenario[live].loser_win;
      if (s.u1 > s.u2)
        c.require(w1 <= w0 + 1e-7, "agent 2 gained from agent 1's raise");
      else
        c.require(w1 >= w0 - 1e-7, "agent 1 lost from its own raise");
      ++live;
    }
  }
  for (int i = 0; i < 250 && c.ok; ++i) {
    Ckddg b = testing::random_ckddg(rng, 4, 3);
    Policy p = testing::random_policy(rng, b.actions, b.actions);
    double e0 = eval_ckddg(b, p, g_threads).total;
    Ckddg grown = b, hobbled = b;
    bool grew = false, hobbled_any = false;
    for (auto& s : grown.scenarios)
      for (const auto& a : grown.actions) {
        bool has = false;
        for (const auto& w : s.avail_winner) has = has || w == a;
        if (!has) {
          s.avail_winner.push_back(a);
          grew = true;
          break;
        }
      }
    for (auto& s : hobbled.scenarios)
      for (const auto& a : hobbled.actions) {
        bool has = false;
        for (const auto& l : s.avail_loser) has = has || l == a;
        if (!has) {
          s.avail_loser.push_back(a);
          hobbled_any = true;
          break;
        }
      }
    if (grew)
      c.require(eval_ckddg(grown, p, g_threads).total <= e0 + 1e-7,
                "winner actions raised the error");
    if (hobbled_any)
      c.require(eval_ckddg(hobbled, p, g_threads).total >= e0 - 1e-7,
                "loser actions lowered the error");
  }
  c.note("500 perturbation triples checked");
  return c;
}

// 10. On 300 random tiny two-sided games the decision procedure agrees
//     with exhaustive {0, 1/2, 1} policy enumeration.
Check criterion10() {
  Check c;
  std::mt19937_64 rng(0xACC10);
  int with_witness = 0;
  for (int i = 0; i < 300 && c.ok; ++i) {
    Ckdg g = testing::random_ckdg(rng, 3, 4);
    bool oracle = testing::enumerate_perfect_exists(g, 16);
    auto decided = decide_perfect(g);
    with_witness += decided.has_value();
    c.require(decided.has_value() == oracle, "decision disagreed with oracle");
  }
  c.note(std::to_string(with_witness) + "/300 games admit perfect policies");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--slow")) slow = true;
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) g_threads = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--slow] [--only N] [--threads N]\n", argv[0]);
      return 2;
    }
  }

  const char* names[] = {
      "five-scenario replication (error = 0.05)",
      "binary-policy floor (0.056)",
      "cyclic pair: perfect policy and 1/6 floor",
      "ladder-parameter search hits 3.5e-5 at r = 3596/7",
      "ranking-family mean equals 0.25 on the (6,2) instance",
      "highlight-family bound and summation oracle",
      "tail bounds dominate exact binomial tails",
      "satisfiability equals both perfect-policy decisions",
      "policy and availability monotonicity",
      "decision procedure equals exhaustive enumeration",
  };
  std::function<Check()> checks[] = {
      criterion1,
      [&] { return criterion2(slow); },
      criterion3,
      criterion4,
      criterion5,
      criterion6,
      criterion7,
      criterion8,
      criterion9,
      criterion10,
  };

  bool all_ok = true;
  for (int k = 1; k <= 10; ++k) {
    if (only && k != only) continue;
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = checks[k - 1]();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("criterion %2d: %s — %s [%s] (%.1fs)\n", k,
                c.ok ? "PASS" : "FAIL", names[k - 1], c.detail.c_str(), secs);
    std::fflush(stdout);
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}
