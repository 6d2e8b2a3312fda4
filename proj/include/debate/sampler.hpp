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
// The two randomized policy families.
//
// Highlight policies: independently mark each (agent, action) pair with
// probability beta = alpha / n; a marked action beats an unmarked one, a
// coin decides marked-versus-marked cells, and unmarked-versus-unmarked
// cells split evenly.  The default action is never marked.
//
// Ranking policies: a uniformly random total order on (agent, action) pairs
// with the default ranked 0; the higher-ranked action wins outright, and
// only the default can tie with the default.
//
// All draws are counter-based on a fixed canonical order (agent 1's actions
// in list order, then agent 2's; tiebreak coins indexed by the cell), so a
// seed reproduces the identical spec on any platform.

#ifndef DEBATE_SAMPLER_HPP
#define DEBATE_SAMPLER_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "debate/game.hpp"
#include "debate/json_io.hpp"
#include "debate/rng.hpp"

namespace debate {

struct HighlightSpec {
  std::vector<ActionLabel> actions;
  std::vector<bool> marked1, marked2;  // per action index, per agent
  // Winner for marked-vs-marked cells; 0 where undefined (cell not marked
  // on both sides).
  std::vector<std::vector<std::uint8_t>> tiebreak;
  double beta = 0.0;
};

struct RankingSpec {
  std::vector<ActionLabel> actions;
  // rank1[i]/rank2[i] in 1..2|A|, a bijection over both agents' actions;
  // the default action has implicit rank 0.
  std::vector<int> rank1, rank2;
};

inline HighlightSpec sample_highlight_spec(const std::vector<ActionLabel>& actions,
                                           double alpha, int n, Seed seed) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw InputError("alpha must lie in (0, 1]");
  if (n < 1) throw InputError("n must be a positive integer");
  const int na = static_cast<int>(actions.size());
  HighlightSpec spec;
  spec.actions = actions;
  spec.beta = alpha / n;
  spec.marked1.resize(na);
  spec.marked2.resize(na);
  // Draw indices: 0..na-1 agent 1, na..2na-1 agent 2, then one coin per
  // (row action, column action) cell regardless of marking.
  for (int i = 0; i < na; ++i)
    spec.marked1[i] = rng::unit_double(rng::stream_draw(seed, i)) < spec.beta;
  for (int i = 0; i < na; ++i)
    spec.marked2[i] = rng::unit_double(rng::stream_draw(seed, na + i)) < spec.beta;
  spec.tiebreak.assign(na, std::vector<std::uint8_t>(na, 0));
  for (int i = 0; i < na; ++i) {
    if (!spec.marked1[i]) continue;
    for (int j = 0; j < na; ++j) {
      if (!spec.marked2[j]) continue;
      std::uint64_t bits = rng::stream_draw(
          seed, 2ULL * na + static_cast<std::uint64_t>(i) * na + j);
      spec.tiebreak[i][j] = rng::bounded(bits, 2) == 0 ? 1 : 2;
    }
  }
  return spec;
}

inline Policy highlight_policy(const HighlightSpec& spec,
                               const std::vector<ActionLabel>& actions) {
  const int na = static_cast<int>(actions.size());
  if (spec.actions != actions ||
      static_cast<int>(spec.marked1.size()) != na ||
      static_cast<int>(spec.marked2.size()) != na)
    throw InputError("highlight spec does not match the action list");
  Policy p = constant_policy(actions, actions, 0.5);
  for (int i = 0; i <= na; ++i) {
    const bool m1 = i < na && spec.marked1[i];
    for (int j = 0; j <= na; ++j) {
      const bool m2 = j < na && spec.marked2[j];
      if (m1 && m2) {
        std::uint8_t w = spec.tiebreak[i][j];
        if (w != 1 && w != 2)
          throw InputError("highlight spec lacks a tiebreak for a marked cell");
        p.p1(i, j) = w == 1 ? 1.0 : 0.0;
      } else if (m1) {
        p.p1(i, j) = 1.0;
      } else if (m2) {
        p.p1(i, j) = 0.0;
      }
    }
  }
  return p;
}

inline Policy ranking_policy(const RankingSpec& spec) {
  const int na = static_cast<int>(spec.actions.size());
  Policy p = constant_policy(spec.actions, spec.actions, 0.5);
  auto rank = [&](const std::vector<int>& r, int i) { return i < na ? r[i] : 0; };
  for (int i = 0; i <= na; ++i)
    for (int j = 0; j <= na; ++j) {
      int r1 = rank(spec.rank1, i), r2 = rank(spec.rank2, j);
      p.p1(i, j) = r1 > r2 ? 1.0 : r1 < r2 ? 0.0 : 0.5;
    }
  return p;
}

inline std::pair<RankingSpec, Policy> sample_ranking_policy(
    const std::vector<ActionLabel>& actions, Seed seed) {
  const int na = static_cast<int>(actions.size());
  RankingSpec spec;
  spec.actions = actions;
  std::vector<int> ranks(2 * na);
  for (int i = 0; i < 2 * na; ++i) ranks[i] = i + 1;
  // Fisher-Yates over the canonical element order, draw t per step.
  std::uint64_t t = 0;
  for (int i = 2 * na - 1; i > 0; --i, ++t) {
    int j = static_cast<int>(rng::bounded(rng::stream_draw(seed, t),
                                          static_cast<std::uint32_t>(i + 1)));
    std::swap(ranks[i], ranks[j]);
  }
  spec.rank1.assign(ranks.begin(), ranks.begin() + na);
  spec.rank2.assign(ranks.begin() + na, ranks.end());
  return {spec, ranking_policy(spec)};
}

// Audit/replay serialization.

inline std::string highlight_spec_to_json(const HighlightSpec& spec) {
  std::ostringstream out;
  out << "{\"highlighted\":[";
  bool first = true;
  const int na = static_cast<int>(spec.actions.size());
  for (int agent = 1; agent <= 2; ++agent) {
    const auto& marked = agent == 1 ? spec.marked1 : spec.marked2;
    for (int i = 0; i < na; ++i) {
      if (!marked[i]) continue;
      if (!first) out << ",";
      first = false;
      out << "[\"" << agent << "\"," << jsonio::quoted(spec.actions[i]) << "]";
    }
  }
  out << "],\"tiebreak\":[";
  first = true;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (!(i < static_cast<int>(spec.marked1.size()) && spec.marked1[i] &&
            spec.marked2[j]))
        continue;
      if (!first) out << ",";
      first = false;
      out << "[" << jsonio::quoted(spec.actions[i]) << ","
          << jsonio::quoted(spec.actions[j]) << ",\""
          << static_cast<int>(spec.tiebreak[i][j]) << "\"]";
    }
  out << "],\"beta\":" << fmt17(spec.beta) << "}";
  return out.str();
}

inline std::string ranking_spec_to_json(const RankingSpec& spec) {
  std::ostringstream out;
  out << "{\"sigma\":{";
  bool first = true;
  for (int agent = 1; agent <= 2; ++agent) {
    const auto& ranks = agent == 1 ? spec.rank1 : spec.rank2;
    for (size_t i = 0; i < spec.actions.size(); ++i) {
      if (!first) out << ",";
      first = false;
      out << jsonio::quoted(std::to_string(agent) + ":" + spec.actions[i]) << ":"
          << ranks[i];
    }
  }
  out << "}}";
  return out.str();
}

}  // namespace debate

#endif  // DEBATE_SAMPLER_HPP
