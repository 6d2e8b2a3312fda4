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
// Game and policy files.  Parsing uses nlohmann::json; writing is done by
// hand so that every number is emitted with 17 significant digits and
// probabilities are emitted as decimal strings, which keeps files byte
// stable and loss-free across load/save round trips.

#ifndef DEBATE_JSON_IO_HPP
#define DEBATE_JSON_IO_HPP

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "debate/game.hpp"

namespace debate {

using GameFile = std::variant<Ckdg, Ckddg>;

namespace jsonio {

inline std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

inline std::string quoted(const std::string& s) { return "\"" + escape(s) + "\""; }

inline std::string labels(const std::vector<ActionLabel>& list) {
  std::string out = "[";
  for (size_t i = 0; i < list.size(); ++i) {
    if (i) out += ",";
    out += quoted(list[i]);
  }
  return out + "]";
}

inline nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline double parse_prob(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    char* end = nullptr;
    double d = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
      throw InputError(where + ": prob is not a decimal string: '" + s + "'");
    return d;
  }
  if (v.is_number()) return v.get<double>();
  throw InputError(where + ": prob must be a decimal string");
}

inline std::vector<ActionLabel> parse_labels(const nlohmann::json& v,
                                             const std::string& where,
                                             bool allow_default = false) {
  if (!v.is_array()) throw InputError(where + ": expected an array of labels");
  std::vector<ActionLabel> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw InputError(where + ": labels must be strings");
    auto s = e.get<std::string>();
    if (!allow_default && s == kDefaultToken)
      throw InputError(where + ": reserved label " + std::string(kDefaultToken));
    out.push_back(std::move(s));
  }
  return out;
}

template <typename T>
T field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key))
    throw InputError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(where + ": field '" + key + "' has the wrong type");
  }
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace jsonio

inline GameFile load_game(const std::string& path) {
  nlohmann::json j = jsonio::parse_file(path);
  if (!j.is_object() || !j.contains("kind"))
    throw InputError(path + ": missing game kind");
  const std::string kind = jsonio::field<std::string>(j, "kind", path);
  if (kind == "ckdg") {
    Ckdg g;
    g.actions1 = jsonio::parse_labels(j.value("actions1", nlohmann::json::array()),
                                      path + ": actions1");
    g.actions2 = jsonio::parse_labels(j.value("actions2", nlohmann::json::array()),
                                      path + ": actions2");
    if (!j.contains("scenarios")) throw InputError(path + ": missing scenarios");
    for (const auto& js : j.at("scenarios")) {
      CkdgScenario s;
      s.id = jsonio::field<std::string>(js, "id", path);
      s.prob = jsonio::parse_prob(js.value("prob", nlohmann::json()), path + " '" + s.id + "'");
      s.avail1 = jsonio::parse_labels(js.value("avail1", nlohmann::json::array()),
                                      path + " '" + s.id + "' avail1");
      s.avail2 = jsonio::parse_labels(js.value("avail2", nlohmann::json::array()),
                                      path + " '" + s.id + "' avail2");
      s.u1 = jsonio::field<double>(js, "u1", path + " '" + s.id + "'");
      s.u2 = jsonio::field<double>(js, "u2", path + " '" + s.id + "'");
      g.scenarios.push_back(std::move(s));
    }
    return g;
  }
  if (kind == "ckddg" || kind == "piddg") {
    Ckddg g;
    g.kind = kind == "ckddg" ? GameKind::kCommonKnowledge
                             : GameKind::kPrivateInformation;
    g.actions = jsonio::parse_labels(j.value("actions", nlohmann::json::array()),
                                     path + ": actions");
    if (!j.contains("scenarios")) throw InputError(path + ": missing scenarios");
    for (const auto& js : j.at("scenarios")) {
      DistinguishingScenario s;
      s.id = jsonio::field<std::string>(js, "id", path);
      s.prob = jsonio::parse_prob(js.value("prob", nlohmann::json()), path + " '" + s.id + "'");
      s.avail_winner = jsonio::parse_labels(
          js.value("availWinner", nlohmann::json::array()),
          path + " '" + s.id + "' availWinner");
      s.avail_loser = jsonio::parse_labels(
          js.value("availLoser", nlohmann::json::array()),
          path + " '" + s.id + "' availLoser");
      g.scenarios.push_back(std::move(s));
    }
    return g;
  }
  throw InputError(path + ": unknown kind '" + kind + "'");
}

inline std::string game_to_json(const Ckdg& g) {
  std::ostringstream out;
  out << "{\"kind\":\"ckdg\",\"actions1\":" << jsonio::labels(g.actions1)
      << ",\"actions2\":" << jsonio::labels(g.actions2) << ",\"scenarios\":[";
  for (size_t i = 0; i < g.scenarios.size(); ++i) {
    const auto& s = g.scenarios[i];
    if (i) out << ",";
    out << "{\"id\":" << jsonio::quoted(s.id) << ",\"prob\":\"" << fmt17(s.prob)
        << "\",\"avail1\":" << jsonio::labels(s.avail1)
        << ",\"avail2\":" << jsonio::labels(s.avail2) << ",\"u1\":" << fmt17(s.u1)
        << ",\"u2\":" << fmt17(s.u2) << "}";
  }
  out << "]}";
  return out.str();
}

inline std::string game_to_json(const Ckddg& g) {
  std::ostringstream out;
  out << "{\"kind\":\""
      << (g.kind == GameKind::kCommonKnowledge ? "ckddg" : "piddg")
      << "\",\"actions\":" << jsonio::labels(g.actions) << ",\"scenarios\":[";
  for (size_t i = 0; i < g.scenarios.size(); ++i) {
    const auto& s = g.scenarios[i];
    if (i) out << ",";
    out << "{\"id\":" << jsonio::quoted(s.id) << ",\"prob\":\"" << fmt17(s.prob)
        << "\",\"availWinner\":" << jsonio::labels(s.avail_winner)
        << ",\"availLoser\":" << jsonio::labels(s.avail_loser) << "}";
  }
  out << "]}";
  return out.str();
}

inline void save_game(const Ckdg& g, const std::string& path) {
  jsonio::write_file(path, game_to_json(g) + "\n");
}

inline void save_game(const Ckddg& g, const std::string& path) {
  jsonio::write_file(path, game_to_json(g) + "\n");
}

inline void save_game(const GameFile& g, const std::string& path) {
  std::visit([&](const auto& game) { save_game(game, path); }, g);
}

inline Policy load_policy(const std::string& path) {
  nlohmann::json j = jsonio::parse_file(path);
  Policy p;
  auto rows = jsonio::parse_labels(j.value("rows", nlohmann::json::array()),
                                   path + ": rows", /*allow_default=*/true);
  auto cols = jsonio::parse_labels(j.value("cols", nlohmann::json::array()),
                                   path + ": cols", /*allow_default=*/true);
  auto split_default = [&](std::vector<ActionLabel>& axis, const char* which) {
    if (axis.empty() || axis.back() != kDefaultToken)
      throw InputError(path + ": " + which + " must end with " +
                       std::string(kDefaultToken));
    axis.pop_back();
    for (const auto& a : axis)
      if (a == kDefaultToken)
        throw InputError(path + ": " + which + " lists " +
                         std::string(kDefaultToken) + " more than once");
  };
  split_default(rows, "rows");
  split_default(cols, "cols");
  p.row_actions = std::move(rows);
  p.col_actions = std::move(cols);
  if (!j.contains("p1") || !j.at("p1").is_array())
    throw InputError(path + ": missing p1 matrix");
  const auto& jm = j.at("p1");
  int nr = static_cast<int>(p.row_actions.size()) + 1;
  int nc = static_cast<int>(p.col_actions.size()) + 1;
  if (static_cast<int>(jm.size()) != nr)
    throw InputError(path + ": p1 must have " + std::to_string(nr) + " rows");
  p.p1 = Matrix(nr, nc);
  for (int r = 0; r < nr; ++r) {
    const auto& jrow = jm.at(r);
    if (!jrow.is_array() || static_cast<int>(jrow.size()) != nc)
      throw InputError(path + ": p1 row " + std::to_string(r) + " must have " +
                       std::to_string(nc) + " entries");
    for (int c = 0; c < nc; ++c) {
      if (!jrow.at(c).is_number())
        throw InputError(path + ": p1 entries must be numbers");
      p.p1(r, c) = jrow.at(c).get<double>();
    }
  }
  return p;
}

inline std::string policy_to_json(const Policy& p) {
  std::ostringstream out;
  auto axis = [](const std::vector<ActionLabel>& a) {
    auto copy = a;
    copy.push_back(kDefaultToken);
    return jsonio::labels(copy);
  };
  out << "{\"rows\":" << axis(p.row_actions) << ",\"cols\":" << axis(p.col_actions)
      << ",\"p1\":[";
  for (int r = 0; r < p.p1.rows(); ++r) {
    if (r) out << ",";
    out << "[";
    for (int c = 0; c < p.p1.cols(); ++c) {
      if (c) out << ",";
      out << fmt17(p.p1(r, c));
    }
    out << "]";
  }
  out << "]}";
  return out.str();
}

inline void save_policy(const Policy& p, const std::string& path) {
  jsonio::write_file(path, policy_to_json(p) + "\n");
}

}  // namespace debate

#endif  // DEBATE_JSON_IO_HPP
