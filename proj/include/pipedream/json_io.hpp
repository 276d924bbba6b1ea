#pragma once

#include <json.hpp>
#include <string>

#include "pipedream/biword.hpp"
#include "pipedream/bpd.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/tableau.hpp"

namespace pipedream {

using nlohmann::json;

inline json to_json(const Permutation& p) { return json(p.window_padded(std::max(p.size(), 1))); }

inline Permutation permutation_from_json(const json& j) {
  if (j.is_string()) return Permutation::parse(j.get<std::string>());
  return Permutation(j.get<std::vector<int>>());
}

inline json to_json(const PlacticBiword& q) { return json{{"top", q.top()}, {"bottom", q.bottom()}}; }

inline PlacticBiword biword_from_json(const json& j) {
  return PlacticBiword(j.at("top").get<std::vector<int>>(), j.at("bottom").get<std::vector<int>>());
}

inline json to_json(const BPD& d) {
  json rows = json::array();
  std::string text = d.render();
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      rows.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) rows.push_back(line);
  return rows;
}

inline BPD bpd_from_json(const json& j) {
  std::string text;
  for (const auto& row : j) text += row.get<std::string>() + "\n";
  return BPD::parse(text);
}

inline json to_json(const DecoratedChain& ch) {
  json steps = json::array();
  for (const auto& s : ch.steps) steps.push_back({{"alpha", s.alpha}, {"beta", s.beta}, {"label", s.label}});
  return json{{"start", to_json(ch.start)}, {"steps", steps}};
}

inline DecoratedChain chain_from_json(const json& j) {
  DecoratedChain ch;
  ch.start = permutation_from_json(j.at("start"));
  Permutation cur = ch.start;
  for (const auto& s : j.at("steps")) {
    int alpha = s.at("alpha").get<int>();
    int beta = s.at("beta").get<int>();
    int label = s.at("label").get<int>();
    ch.steps.push_back(cover_up(cur, alpha, beta, label));
    cur = cur.with_swapped_positions(alpha, beta);
  }
  return ch;
}

inline json to_json(const SSYT& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

inline SSYT ssyt_from_json(const json& j) { return SSYT(j.get<std::vector<std::vector<int>>>()); }

}  // namespace pipedream
