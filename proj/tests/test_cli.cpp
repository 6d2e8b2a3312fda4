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

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <sstream>

#include "debate/cli.hpp"
#include "debate/json_io.hpp"
#include "debate/reference_games.hpp"

using namespace debate;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempFiles {
  std::string game = "/tmp/cli_game.json";
  std::string policy = "/tmp/cli_policy.json";
  TempFiles() {
    save_game(nonbinary_advantage_game(), game);
    save_policy(reference_nonbinary_policy(), policy);
  }
  ~TempFiles() {
    std::remove(game.c_str());
    std::remove(policy.c_str());
  }
};

}  // namespace

TEST_CASE("eval prints the reference total as a bare scalar") {
  TempFiles files;
  auto r = run({"eval", "--game", files.game, "--policy", files.policy});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.back() == '\n');
  REQUIRE(std::stod(r.out) == Catch::Approx(0.05).margin(1e-9));
  REQUIRE(r.out == fmt17(std::stod(r.out)) + "\n");  // 17 significant digits
}

TEST_CASE("eval is byte-stable across invocations") {
  TempFiles files;
  auto a = run({"eval", "--game", files.game, "--policy", files.policy, "--json"});
  auto b = run({"eval", "--game", files.game, "--policy", files.policy, "--json"});
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out.find("\"total\":") != std::string::npos);
  REQUIRE(a.out.find("\"perScenario\":") != std::string::npos);
}

TEST_CASE("the distinguishing floor prints as a bare scalar") {
  auto r = run({"bound", "lower", "--kind", "piddg", "--m", "3", "--n", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "0.16666666666666666\n");
}

TEST_CASE("missing files exit with the i/o code") {
  auto r = run({"eval", "--game", "/tmp/definitely_missing.json", "--policy",
                "/tmp/also_missing.json"});
  REQUIRE(r.code == 3);
  REQUIRE(r.err.find("error") != std::string::npos);
}

TEST_CASE("usage problems exit with the usage code") {
  REQUIRE(run({"eval"}).code == 2);
  REQUIRE(run({"frobnicate"}).code == 2);
  REQUIRE(run({"bound", "lower", "--kind", "nope", "--m", "3", "--n", "1"}).code == 2);
}

TEST_CASE("semantics overrides are refused when inconsistent") {
  TempFiles files;
  auto refused = run({"eval", "--game", files.game, "--policy", files.policy,
                      "--semantics", "ckdg"});
  REQUIRE(refused.code == 3);
  auto piddg = run({"eval", "--game", files.game, "--policy", files.policy,
                    "--semantics", "piddg"});
  REQUIRE(piddg.code == 0);

  std::string two_sided = "/tmp/cli_two_sided.json";
  save_game(unfurl(nonbinary_advantage_game()), two_sided);
  auto refused2 = run({"eval", "--game", two_sided, "--policy", files.policy,
                       "--semantics", "piddg"});
  REQUIRE(refused2.code == 3);
  std::remove(two_sided.c_str());
}

TEST_CASE("unfurl writes a loadable two-sided game") {
  TempFiles files;
  std::string out_path = "/tmp/cli_unfurled.json";
  auto r = run({"unfurl", "--game", files.game, "--out", out_path});
  REQUIRE(r.code == 0);
  GameFile g = load_game(out_path);
  REQUIRE(std::holds_alternative<Ckdg>(g));
  REQUIRE(std::get<Ckdg>(g).scenarios.size() == 10);
  std::remove(out_path.c_str());
}

TEST_CASE("sampling is seed-deterministic through the CLI") {
  TempFiles files;
  auto a = run({"sample", "ranking", "--game", files.game, "--seed", "42"});
  auto b = run({"sample", "ranking", "--game", files.game, "--seed", "42"});
  auto c = run({"sample", "ranking", "--game", files.game, "--seed", "43"});
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out != c.out);

  std::string pol_path = "/tmp/cli_sampled.json";
  std::string spec_path = "/tmp/cli_spec.json";
  auto d = run({"sample", "highlight", "--game", files.game, "--alpha", "0.8",
                "--n", "2", "--seed", "7", "--out", pol_path, "--spec-out",
                spec_path});
  REQUIRE(d.code == 0);
  Policy p = load_policy(pol_path);
  REQUIRE(p.row_actions.size() == 4);
  std::remove(pol_path.c_str());
  std::remove(spec_path.c_str());
}

TEST_CASE("bound subcommands cover the closed forms") {
  REQUIRE(run({"bound", "corollary", "--r", "4"}).code == 0);
  REQUIRE(run({"bound", "corollary", "--r", "2"}).code == 3);
  REQUIRE(run({"bound", "thm51", "--r", "1024", "--alpha", "1", "--mu", "0.5",
               "--nu", "0.5"})
              .code == 0);
  REQUIRE(run({"bound", "chernoff", "--tail", "lower", "--trials", "100",
               "--beta", "0.1", "--x", "5"})
              .code == 0);
  TempFiles files;
  auto up = run({"bound", "piddg-upper", "--game", files.game});
  REQUIRE(up.code == 0);
}

TEST_CASE("optimize reports a missed target through the exit code") {
  auto miss = run({"bound", "optimize", "--r", "2", "--target", "1e-9",
                   "--budget", "100000", "--json"});
  REQUIRE(miss.code == 1);
  REQUIRE(miss.out.find("\"targetMet\":false") != std::string::npos);
}

TEST_CASE("reduce and perfect round-trip through files") {
  std::string cnf_path = "/tmp/cli_formula.cnf";
  jsonio::write_file(cnf_path, "p cnf 2 2\n1 2 0\n-1 2 0\n");
  std::string game_path = "/tmp/cli_reduced.json";
  REQUIRE(run({"reduce", "sat", "--cnf", cnf_path, "--out", game_path}).code == 0);

  auto perfect = run({"perfect", "--game", game_path, "--json"});
  REQUIRE(perfect.code == 0);
  REQUIRE(perfect.out.find("\"perfect\":true") != std::string::npos);

  std::string ckddg_path = "/tmp/cli_anon.json";
  REQUIRE(run({"reduce", "ckdg-to-ckddg", "--game", game_path, "--out",
               ckddg_path})
              .code == 0);
  auto perfect2 = run({"perfect", "--game", ckddg_path});
  REQUIRE(perfect2.code == 0);
  REQUIRE(perfect2.out.substr(0, 7) == "perfect");

  std::remove(cnf_path.c_str());
  std::remove(game_path.c_str());
  std::remove(ckddg_path.c_str());
}

TEST_CASE("perfect answers none on the advantage game") {
  TempFiles files;
  auto r = run({"perfect", "--game", files.game});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "none\n");
}

TEST_CASE("perfect refuses private-information games") {
  std::string path = "/tmp/cli_piddg.json";
  save_game(cyclic_game(GameKind::kPrivateInformation), path);
  auto r = run({"perfect", "--game", path});
  REQUIRE(r.code == 3);
  std::remove(path.c_str());
}

TEST_CASE("thread count never changes the bytes") {
  TempFiles files;
  auto a = run({"eval", "--game", files.game, "--policy", files.policy,
                "--threads", "1"});
  auto b = run({"eval", "--game", files.game, "--policy", files.policy,
                "--threads", "4"});
  REQUIRE(a.out == b.out);
  auto c = run({"mc", "ranking", "--game", files.game, "--trials", "60",
                "--seed", "3", "--threads", "3", "--json"});
  auto d = run({"mc", "ranking", "--game", files.game, "--trials", "60",
                "--seed", "3", "--threads", "1", "--json"});
  REQUIRE(c.out == d.out);
}

TEST_CASE("mc subcommands emit stable reports") {
  TempFiles files;
  auto a = run({"mc", "ranking", "--game", files.game, "--trials", "50",
                "--seed", "9", "--json"});
  auto b = run({"mc", "ranking", "--game", files.game, "--trials", "50",
                "--seed", "9", "--json"});
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out.find("\"perTrialSeedRule\"") != std::string::npos);

  auto c = run({"mc", "highlight", "--game", files.game, "--alpha", "0.5",
                "--n", "4", "--trials", "20", "--seed", "11"});
  REQUIRE(c.code == 0);
  REQUIRE(c.out.find("surrogateMean") != std::string::npos);
}

TEST_CASE("replication cases run end to end") {
  auto r = run({"replicate", "prop3_7"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("PASS") != std::string::npos);
  auto bad = run({"replicate", "prop9_9"});
  REQUIRE(bad.code == 2);
}
