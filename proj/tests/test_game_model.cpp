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
#include <random>

#include "debate/game.hpp"
#include "debate/json_io.hpp"
#include "debate/reference_games.hpp"

#include "test_util.hpp"

using namespace debate;

namespace {

std::string temp_path(const std::string& name) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
         "/" + name;
}

bool mentions(const std::vector<std::string>& violations, const std::string& s) {
  for (const auto& v : violations)
    if (v.find(s) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("validation accepts the bundled five-scenario game") {
  REQUIRE(validate(nonbinary_advantage_game()).empty());
}

TEST_CASE("validation flags a bad probability sum") {
  Ckddg b = nonbinary_advantage_game();
  b.scenarios[0].prob = 0.2;  // total 0.9
  auto v = validate(b);
  REQUIRE_FALSE(v.empty());
  REQUIRE(mentions(v, "sum"));
}

TEST_CASE("validation names the scenario holding an unknown label") {
  Ckddg b = nonbinary_advantage_game();
  b.scenarios[2].avail_winner.push_back("ghost");
  auto v = validate(b);
  REQUIRE(v.size() == 1);
  REQUIRE(mentions(v, "'2'"));
  REQUIRE(mentions(v, "ghost"));
}

TEST_CASE("validation rejects the reserved label and duplicates") {
  Ckdg g;
  g.actions1 = {"x", "x"};
  g.actions2 = {kDefaultToken};
  auto v = validate(g);
  REQUIRE(mentions(v, "duplicate"));
  REQUIRE(mentions(v, kDefaultToken));
}

TEST_CASE("unfurling halves every probability and doubles the scenarios") {
  Ckddg b = nonbinary_advantage_game();
  Ckdg g = unfurl(b);
  REQUIRE(g.scenarios.size() == 10);
  REQUIRE(validate(g).empty());
  double expected[] = {0.15, 0.15, 0.15, 0.15, 0.15, 0.15, 0.03, 0.03, 0.02, 0.02};
  for (int i = 0; i < 10; ++i)
    REQUIRE(g.scenarios[i].prob == Catch::Approx(expected[i]).margin(1e-15));
}

TEST_CASE("unfurling a single scenario swaps availability across the pair") {
  Ckddg b;
  b.actions = {"u", "v"};
  b.scenarios.push_back({"only", 1.0, {"u"}, {"v"}});
  Ckdg g = unfurl(b);
  REQUIRE(g.scenarios.size() == 2);
  REQUIRE(g.scenarios[0].prob == 0.5);
  REQUIRE(g.scenarios[1].prob == 0.5);
  REQUIRE(g.scenarios[0].avail1 == std::vector<ActionLabel>{"u"});
  REQUIRE(g.scenarios[0].avail2 == std::vector<ActionLabel>{"v"});
  REQUIRE(g.scenarios[1].avail1 == std::vector<ActionLabel>{"v"});
  REQUIRE(g.scenarios[1].avail2 == std::vector<ActionLabel>{"u"});
}

TEST_CASE("unfurling assigns exactly one unit of utility per scenario") {
  Ckdg g = unfurl(cyclic_game());
  REQUIRE(g.scenarios.size() == 6);
  for (const auto& s : g.scenarios) {
    REQUIRE((s.u1 == 0.0 || s.u1 == 1.0));
    REQUIRE(s.u1 + s.u2 == 1.0);
  }
}

TEST_CASE("unfurl keeps pair order aligned with the source scenarios") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Ckddg b = testing::random_ckddg(rng);
    Ckdg g = unfurl(b);
    REQUIRE(validate(g).empty());
    double sum = 0.0;
    size_t k = 0;
    for (const auto& s : b.scenarios) {
      REQUIRE(g.scenarios[k].id == "1:" + s.id);
      REQUIRE(g.scenarios[k + 1].id == "2:" + s.id);
      k += 2;
    }
    for (const auto& s : g.scenarios) sum += s.prob;
    REQUIRE(sum == Catch::Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("game files round-trip through save and load") {
  Ckddg b = nonbinary_advantage_game();
  auto path = temp_path("roundtrip_game.json");
  save_game(b, path);
  GameFile loaded = load_game(path);
  REQUIRE(std::holds_alternative<Ckddg>(loaded));
  const Ckddg& l = std::get<Ckddg>(loaded);
  REQUIRE(l.actions == b.actions);
  REQUIRE(l.kind == b.kind);
  REQUIRE(l.scenarios.size() == b.scenarios.size());
  for (size_t i = 0; i < l.scenarios.size(); ++i) {
    REQUIRE(l.scenarios[i].id == b.scenarios[i].id);
    REQUIRE(l.scenarios[i].prob == b.scenarios[i].prob);
    REQUIRE(l.scenarios[i].avail_winner == b.scenarios[i].avail_winner);
    REQUIRE(l.scenarios[i].avail_loser == b.scenarios[i].avail_loser);
  }
}

TEST_CASE("round-trip identity holds on random games and policies") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    Ckddg b = testing::random_ckddg(rng);
    b.kind = i % 2 ? GameKind::kPrivateInformation : GameKind::kCommonKnowledge;
    auto path = temp_path("prop_game.json");
    save_game(b, path);
    GameFile lf = load_game(path);
    const Ckddg& l = std::get<Ckddg>(lf);
    REQUIRE(l.kind == b.kind);
    REQUIRE(l.actions == b.actions);
    for (size_t k = 0; k < b.scenarios.size(); ++k)
      REQUIRE(l.scenarios[k].prob == b.scenarios[k].prob);

    Policy p = testing::random_policy(rng, b.actions, b.actions);
    auto ppath = temp_path("prop_policy.json");
    save_policy(p, ppath);
    Policy lp = load_policy(ppath);
    REQUIRE(lp.row_actions == p.row_actions);
    REQUIRE(lp.col_actions == p.col_actions);
    REQUIRE(lp.p1 == p.p1);
  }
  std::remove(temp_path("prop_game.json").c_str());
  std::remove(temp_path("prop_policy.json").c_str());
}

TEST_CASE("two-sided games round-trip as well") {
  std::mt19937_64 rng(13);
  Ckdg g = testing::random_ckdg(rng);
  auto path = temp_path("ckdg_game.json");
  save_game(g, path);
  GameFile loaded = load_game(path);
  REQUIRE(std::holds_alternative<Ckdg>(loaded));
  const Ckdg& l = std::get<Ckdg>(loaded);
  REQUIRE(l.actions1 == g.actions1);
  for (size_t i = 0; i < g.scenarios.size(); ++i) {
    REQUIRE(l.scenarios[i].prob == g.scenarios[i].prob);
    REQUIRE(l.scenarios[i].u1 == g.scenarios[i].u1);
  }
}

TEST_CASE("the piddg kind tag selects private-information semantics") {
  auto path = temp_path("piddg_game.json");
  Ckddg b = cyclic_game(GameKind::kPrivateInformation);
  save_game(b, path);
  REQUIRE(std::get<Ckddg>(load_game(path)).kind ==
          GameKind::kPrivateInformation);
}

TEST_CASE("loading rejects a game that uses the reserved action label") {
  auto path = temp_path("reserved.json");
  jsonio::write_file(path,
                     R"({"kind":"ckddg","actions":["a","__default__"],)"
                     R"("scenarios":[{"id":"s","prob":"1","availWinner":[],"availLoser":[]}]})");
  REQUIRE_THROWS_AS(load_game(path), InputError);
}

TEST_CASE("loading rejects unknown kinds and malformed files") {
  auto path = temp_path("unknown_kind.json");
  jsonio::write_file(path, R"({"kind":"mystery","actions":[],"scenarios":[]})");
  REQUIRE_THROWS_AS(load_game(path), InputError);
  jsonio::write_file(path, "{not json");
  REQUIRE_THROWS_AS(load_game(path), IoError);
  REQUIRE_THROWS_AS(load_game(temp_path("no_such_file.json")), IoError);
}

TEST_CASE("policy files require the default token last on both axes") {
  auto path = temp_path("badpolicy.json");
  jsonio::write_file(path, R"({"rows":["a"],"cols":["__default__"],"p1":[[0.5]]})");
  REQUIRE_THROWS_AS(load_policy(path), InputError);
  jsonio::write_file(
      path,
      R"({"rows":["__default__","a"],"cols":["__default__"],"p1":[[0.5],[0.5]]})");
  REQUIRE_THROWS_AS(load_policy(path), InputError);
}
