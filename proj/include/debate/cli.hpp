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
// Command-line surface.  Exit codes: 0 success, 1 a requested check failed,
// 2 usage error, 3 I/O or validation error.  For fixed inputs and seeds the
// bytes on stdout are identical run to run; all scalars print with 17
// significant digits.

#ifndef DEBATE_CLI_HPP
#define DEBATE_CLI_HPP

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "debate/bounds.hpp"
#include "debate/error_eval.hpp"
#include "debate/json_io.hpp"
#include "debate/mc.hpp"
#include "debate/perfect.hpp"
#include "debate/reducer.hpp"
#include "debate/reference_games.hpp"
#include "debate/sampler.hpp"

namespace debate {

namespace cli_detail {

struct Options {
  std::string game_path, policy_path, cnf_path, out_path, spec_out_path;
  std::string semantics, kind, tail, target_str;
  double alpha = 1.0, eps = 0.0, r = 0.0, beta = 0.0, x = 0.0, y = 0.0;
  std::vector<double> mu, nu;
  int n = 1, m = 1, trials = 1000, threads = 0;
  long budget = 0;
  std::uint64_t seed = 0;
  bool json = false;
  std::string replicate_name;
};

inline Ckddg as_distinguishing(const GameFile& gf, const std::string& semantics,
                               const std::string& path) {
  if (std::holds_alternative<Ckdg>(gf))
    throw InputError(path + " holds a two-sided game where a distinguishing "
                            "game is required");
  Ckddg b = std::get<Ckddg>(gf);
  if (!semantics.empty()) {
    if (semantics == "ckddg")
      b.kind = GameKind::kCommonKnowledge;
    else if (semantics == "piddg")
      b.kind = GameKind::kPrivateInformation;
    else
      throw InputError("a distinguishing game cannot be evaluated under '" +
                       semantics + "' semantics");
  }
  return b;
}

inline void write_or_print(const std::string& text, const std::string& out_path,
                           std::ostream& out) {
  if (out_path.empty())
    out << text << "\n";
  else
    jsonio::write_file(out_path, text + "\n");
}

}  // namespace cli_detail

// Runs one invocation; streams substitute for stdout/stderr in tests.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::Options;
  Options o;
  CLI::App app{"debate-games: evaluate, bound, and search debate-game policies"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "machine-readable output");
    cmd->add_option("--threads", o.threads,
                    "worker threads (0 = DEBATE_THREADS env or 1)");
    cmd->add_option("--out", o.out_path, "write the main artifact here");
  };

  CLI::App* eval = app.add_subcommand("eval", "exact policy error");
  eval->add_option("--game", o.game_path)->required();
  eval->add_option("--policy", o.policy_path)->required();
  eval->add_option("--semantics", o.semantics,
                   "override the file kind (refused when inconsistent)");
  add_common(eval);

  CLI::App* unfurl_cmd = app.add_subcommand(
      "unfurl", "expand a distinguishing game into its two-sided form");
  unfurl_cmd->add_option("--game", o.game_path)->required();
  add_common(unfurl_cmd);

  CLI::App* sample = app.add_subcommand("sample", "draw a randomized policy");
  CLI::App* sample_hl = sample->add_subcommand("highlight");
  sample_hl->add_option("--game", o.game_path)->required();
  sample_hl->add_option("--alpha", o.alpha)->required();
  sample_hl->add_option("--n", o.n)->required();
  sample_hl->add_option("--seed", o.seed)->required();
  sample_hl->add_option("--spec-out", o.spec_out_path);
  add_common(sample_hl);
  CLI::App* sample_rk = sample->add_subcommand("ranking");
  sample_rk->add_option("--game", o.game_path)->required();
  sample_rk->add_option("--seed", o.seed)->required();
  sample_rk->add_option("--spec-out", o.spec_out_path);
  add_common(sample_rk);
  sample->require_subcommand(1);

  CLI::App* bound = app.add_subcommand("bound", "analytic error bounds");
  CLI::App* b51 = bound->add_subcommand("thm51");
  b51->add_option("--r", o.r)->required();
  b51->add_option("--eps", o.eps);
  b51->add_option("--alpha", o.alpha)->required();
  b51->add_option("--mu", o.mu)->required()->delimiter(',');
  b51->add_option("--nu", o.nu)->required()->delimiter(',');
  add_common(b51);
  CLI::App* bcor = bound->add_subcommand("corollary");
  bcor->add_option("--r", o.r)->required();
  add_common(bcor);
  CLI::App* bup = bound->add_subcommand("piddg-upper");
  bup->add_option("--game", o.game_path)->required();
  add_common(bup);
  CLI::App* blo = bound->add_subcommand("lower");
  blo->add_option("--kind", o.kind)->required()->check(
      CLI::IsMember({"piddg", "ckddg"}));
  blo->add_option("--m", o.m)->required();
  blo->add_option("--n", o.n)->required();
  add_common(blo);
  CLI::App* bch = bound->add_subcommand("chernoff");
  bch->add_option("--tail", o.tail)->required()->check(
      CLI::IsMember({"lower", "upper"}));
  bch->add_option("--trials", o.trials)->required();
  bch->add_option("--beta", o.beta)->required();
  bch->add_option("--x", o.x);
  bch->add_option("--y", o.y);
  add_common(bch);
  CLI::App* bopt = bound->add_subcommand("optimize");
  bopt->add_option("--r", o.r)->required();
  bopt->add_option("--eps", o.eps);
  bopt->add_option("--target", o.target_str);
  bopt->add_option("--budget", o.budget);
  add_common(bopt);
  bound->require_subcommand(1);

  CLI::App* reduce = app.add_subcommand("reduce", "constructive reductions");
  CLI::App* rsat = reduce->add_subcommand("sat");
  rsat->add_option("--cnf", o.cnf_path)->required();
  add_common(rsat);
  CLI::App* rck = reduce->add_subcommand("ckdg-to-ckddg");
  rck->add_option("--game", o.game_path)->required();
  add_common(rck);
  reduce->require_subcommand(1);

  CLI::App* perfect = app.add_subcommand(
      "perfect", "decide whether a zero-error policy exists");
  perfect->add_option("--game", o.game_path)->required();
  add_common(perfect);

  CLI::App* mc = app.add_subcommand("mc", "Monte-Carlo family validation");
  CLI::App* mc_hl = mc->add_subcommand("highlight");
  mc_hl->add_option("--game", o.game_path)->required();
  mc_hl->add_option("--alpha", o.alpha)->required();
  mc_hl->add_option("--n", o.n)->required();
  mc_hl->add_option("--trials", o.trials)->required();
  mc_hl->add_option("--seed", o.seed)->required();
  add_common(mc_hl);
  CLI::App* mc_rk = mc->add_subcommand("ranking");
  mc_rk->add_option("--game", o.game_path)->required();
  mc_rk->add_option("--trials", o.trials)->required();
  mc_rk->add_option("--seed", o.seed)->required();
  add_common(mc_rk);
  mc->require_subcommand(1);

  CLI::App* replicate = app.add_subcommand(
      "replicate", "run a bundled reference case and check its numbers");
  replicate->add_option("case", o.replicate_name)
      ->required()
      ->check(CLI::IsMember(replication_case_names()));
  add_common(replicate);

  std::vector<const char*> argv;
  argv.push_back("debate");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      GameFile gf = load_game(o.game_path);
      Policy pol = load_policy(o.policy_path);
      ErrorReport rep;
      if (std::holds_alternative<Ckdg>(gf)) {
        if (!o.semantics.empty() && o.semantics != "ckdg")
          throw InputError("a two-sided game cannot be evaluated under '" +
                           o.semantics + "' semantics");
        rep = eval_ckdg(std::get<Ckdg>(gf), pol, o.threads);
      } else {
        Ckddg b = cli_detail::as_distinguishing(gf, o.semantics, o.game_path);
        rep = eval_distinguishing(b, pol, o.threads);
      }
      if (o.json) {
        std::ostringstream js;
        js << "{\"total\":" << fmt17(rep.total) << ",\"perScenario\":[";
        for (size_t i = 0; i < rep.per_scenario.size(); ++i) {
          const auto& t = rep.per_scenario[i];
          js << (i ? "," : "") << "{\"id\":" << jsonio::quoted(t.id)
             << ",\"loserWin\":" << fmt17(t.loser_win)
             << ",\"weight\":" << fmt17(t.weight) << "}";
        }
        js << "]}";
        cli_detail::write_or_print(js.str(), o.out_path, out);
      } else {
        cli_detail::write_or_print(fmt17(rep.total), o.out_path, out);
      }
      return 0;
    }

    if (*unfurl_cmd) {
      GameFile gf = load_game(o.game_path);
      if (!std::holds_alternative<Ckddg>(gf))
        throw InputError("unfurl expects a distinguishing game");
      Ckdg g = unfurl(std::get<Ckddg>(gf));
      cli_detail::write_or_print(game_to_json(g), o.out_path, out);
      return 0;
    }

    if (*sample) {
      GameFile gf = load_game(o.game_path);
      if (!std::holds_alternative<Ckddg>(gf))
        throw InputError("sampling needs a distinguishing game's action set");
      const Ckddg& b = std::get<Ckddg>(gf);
      Policy pol;
      std::string spec_json;
      if (*sample_hl) {
        HighlightSpec spec =
            sample_highlight_spec(b.actions, o.alpha, o.n, Seed{o.seed});
        pol = highlight_policy(spec, b.actions);
        spec_json = highlight_spec_to_json(spec);
      } else {
        auto [spec, p] = sample_ranking_policy(b.actions, Seed{o.seed});
        pol = std::move(p);
        spec_json = ranking_spec_to_json(spec);
      }
      if (!o.spec_out_path.empty())
        jsonio::write_file(o.spec_out_path, spec_json + "\n");
      cli_detail::write_or_print(policy_to_json(pol), o.out_path, out);
      return 0;
    }

    if (*bound) {
      double value = 0.0;
      if (*b51) {
        BoundParams p;
        p.r = o.r;
        p.eps = o.eps;
        p.alpha = o.alpha;
        p.mu = o.mu;
        p.nu = o.nu;
        value = highlight_error_bound(p);
      } else if (*bcor) {
        value = highlight_error_bound_simple(o.r);
      } else if (*bup) {
        GameFile gf = load_game(o.game_path);
        if (!std::holds_alternative<Ckddg>(gf))
          throw InputError("piddg-upper expects a distinguishing game");
        value = ranking_error_bound(std::get<Ckddg>(gf));
      } else if (*blo) {
        value = o.kind == "piddg" ? piddg_error_floor(o.m, o.n)
                                  : ckddg_error_floor(o.m, o.n);
      } else if (*bch) {
        value = o.tail == "lower"
                    ? binomial_lower_tail_bound(o.trials, o.beta, o.x)
                    : binomial_upper_tail_bound(o.trials, o.beta, o.y);
      } else if (*bopt) {
        std::optional<double> target;
        if (!o.target_str.empty()) target = std::stod(o.target_str);
        OptimizeResult res =
            optimize_highlight_bound(o.r, o.eps, target, o.budget);
        std::ostringstream js;
        js << "{\"bound\":" << fmt17(res.bound)
           << ",\"targetMet\":" << (res.target_met ? "true" : "false")
           << ",\"params\":" << bound_params_to_json(res.params) << "}";
        if (o.json) {
          cli_detail::write_or_print(js.str(), o.out_path, out);
        } else {
          out << fmt17(res.bound) << "\n";
          cli_detail::write_or_print(bound_params_to_json(res.params),
                                     o.out_path, out);
        }
        return res.target_met ? 0 : 1;
      }
      if (o.json)
        cli_detail::write_or_print("{\"value\":" + fmt17(value) + "}",
                                   o.out_path, out);
      else
        cli_detail::write_or_print(fmt17(value), o.out_path, out);
      return 0;
    }

    if (*reduce) {
      if (*rsat) {
        Cnf f = parse_dimacs(o.cnf_path);
        Ckdg g = sat_to_ckdg(f);
        cli_detail::write_or_print(game_to_json(g), o.out_path, out);
        return 0;
      }
      GameFile gf = load_game(o.game_path);
      if (!std::holds_alternative<Ckdg>(gf))
        throw InputError("ckdg-to-ckddg expects a two-sided game");
      auto reduced = ckdg_to_ckddg(std::get<Ckdg>(gf));
      if (std::holds_alternative<EveryPolicyPerfect>(reduced)) {
        out << (o.json ? "{\"everyPolicyPerfect\":true}" : "every policy perfect")
            << "\n";
        return 0;
      }
      cli_detail::write_or_print(game_to_json(std::get<Ckddg>(reduced)),
                                 o.out_path, out);
      return 0;
    }

    if (*perfect) {
      GameFile gf = load_game(o.game_path);
      std::optional<PerfectWitness> w;
      if (std::holds_alternative<Ckdg>(gf))
        w = decide_perfect(std::get<Ckdg>(gf));
      else
        w = decide_perfect_ckddg(std::get<Ckddg>(gf));
      if (!w) {
        out << (o.json ? "{\"perfect\":false}" : "none") << "\n";
        return 0;
      }
      if (!o.out_path.empty())
        jsonio::write_file(o.out_path, policy_to_json(w->policy) + "\n");
      if (o.json) {
        std::ostringstream js;
        js << "{\"perfect\":true,\"perfectActions\":{";
        bool first = true;
        for (const auto& [id, a] : w->perfect_actions) {
          js << (first ? "" : ",") << jsonio::quoted(id) << ":"
             << jsonio::quoted(a);
          first = false;
        }
        js << "},\"policy\":" << policy_to_json(w->policy) << "}";
        out << js.str() << "\n";
      } else {
        out << "perfect\n";
        for (const auto& [id, a] : w->perfect_actions)
          out << id << " -> " << a << "\n";
      }
      return 0;
    }

    if (*mc) {
      GameFile gf = load_game(o.game_path);
      Ckddg b = cli_detail::as_distinguishing(gf, "", o.game_path);
      McReport rep = *mc_hl ? mc_highlight(b, o.alpha, o.n, o.trials,
                                           Seed{o.seed}, o.threads)
                            : mc_ranking(b, o.trials, Seed{o.seed}, o.threads);
      cli_detail::write_or_print(
          o.json ? mc_report_to_json(rep) : mc_report_to_text(rep), o.out_path,
          out);
      return rep.comparator.applicable && !rep.comparator.satisfied ? 1 : 0;
    }

    if (*replicate) {
      ReplicationReport rep = replicate_case(o.replicate_name, o.threads);
      if (o.json) {
        std::ostringstream js;
        js << "{\"case\":" << jsonio::quoted(rep.name)
           << ",\"passed\":" << (rep.passed ? "true" : "false") << ",\"lines\":[";
        for (size_t i = 0; i < rep.lines.size(); ++i)
          js << (i ? "," : "") << jsonio::quoted(rep.lines[i]);
        js << "]}";
        out << js.str() << "\n";
      } else {
        out << rep.name << "\n";
        for (const auto& l : rep.lines) out << l << "\n";
        out << (rep.passed ? "PASS" : "FAIL") << "\n";
      }
      return rep.passed ? 0 : 1;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace debate

#endif  // DEBATE_CLI_HPP
