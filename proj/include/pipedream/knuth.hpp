#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pipedream/biword.hpp"
#include "pipedream/bpd.hpp"
#include "pipedream/error.hpp"
#include "pipedream/insertion.hpp"

namespace pipedream {

// One application of a generalized Knuth relation.
struct KnuthMove {
  enum Rule { R1, R2, R3, R4 };
  Rule rule;
  int position;  // leftmost biletter involved (0-based)
  bool forward;  // reading the relation left to right as printed

  const char* rule_name() const {
    switch (rule) {
      case R1: return "R1";
      case R2: return "R2";
      case R3: return "R3";
      case R4: return "R4";
    }
    return "?";
  }
};

// All plactic biwords one generalized Knuth move away, with the move.
//   (1)  b a c ~ b c a   (a < b <= c, equal labels)
//   (2)  a c b ~ c a b   (a <= b < c, equal labels)
//   (3)  <a/k+1><b/k> ~ <a/k><b/k>     (a <= b)
//   (4)  <b/k+1><a/k+1> ~ <b/k+1><a/k> (a < b)
// Moves that would leave the plactic set are not applied.
inline std::vector<std::pair<PlacticBiword, KnuthMove>> knuth_neighbors(const PlacticBiword& q) {
  std::vector<std::pair<PlacticBiword, KnuthMove>> out;
  const auto& bs = q.biletters();
  auto push = [&](std::vector<Biletter> v, KnuthMove m) {
    if (!PlacticBiword::is_plactic(v)) return;
    for (const auto& b : v)
      if (b.a > b.k) return;
    out.emplace_back(PlacticBiword(std::move(v)), m);
  };
  for (size_t i = 0; i + 2 < bs.size(); ++i) {
    if (bs[i].k != bs[i + 1].k || bs[i].k != bs[i + 2].k) continue;
    int x = bs[i].a, y = bs[i + 1].a, z = bs[i + 2].a;
    // (1) bac -> bca when a < b <= c
    if (y < x && x <= z) {
      auto v = bs;
      std::swap(v[i + 1].a, v[i + 2].a);
      push(std::move(v), {KnuthMove::R1, static_cast<int>(i), true});
    }
    // (1) bca -> bac when a < b <= c
    if (z < x && x <= y) {
      auto v = bs;
      std::swap(v[i + 1].a, v[i + 2].a);
      push(std::move(v), {KnuthMove::R1, static_cast<int>(i), false});
    }
    // (2) acb -> cab when a <= b < c
    if (x <= z && z < y) {
      auto v = bs;
      std::swap(v[i].a, v[i + 1].a);
      push(std::move(v), {KnuthMove::R2, static_cast<int>(i), true});
    }
    // (2) cab -> acb when a <= b < c
    if (y <= z && z < x) {
      auto v = bs;
      std::swap(v[i].a, v[i + 1].a);
      push(std::move(v), {KnuthMove::R2, static_cast<int>(i), false});
    }
  }
  for (size_t i = 0; i + 1 < bs.size(); ++i) {
    int a = bs[i].a, b = bs[i + 1].a;
    // (3): labels (k+1, k) <-> (k, k) with a <= b
    if (a <= b && bs[i].k == bs[i + 1].k + 1) {
      auto v = bs;
      v[i] = Biletter(a, bs[i + 1].k);
      push(std::move(v), {KnuthMove::R3, static_cast<int>(i), true});
    }
    if (a <= b && bs[i].k == bs[i + 1].k && a <= bs[i].k) {
      auto v = bs;
      v[i] = Biletter(a, bs[i].k + 1);
      push(std::move(v), {KnuthMove::R3, static_cast<int>(i), false});
    }
    // (4): first letters b > a, labels (k+1, k+1) <-> (k+1, k)
    if (b < a && bs[i].k == bs[i + 1].k && bs[i + 1].k >= b + 1) {
      auto v = bs;
      v[i + 1] = Biletter(b, bs[i + 1].k - 1);
      push(std::move(v), {KnuthMove::R4, static_cast<int>(i), true});
    }
    if (b < a && bs[i].k == bs[i + 1].k + 1) {
      auto v = bs;
      v[i + 1] = Biletter(b, bs[i].k);
      push(std::move(v), {KnuthMove::R4, static_cast<int>(i), false});
    }
  }
  return out;
}

// BFS closure under the generalized Knuth relations.
inline std::set<PlacticBiword> knuth_class(const PlacticBiword& q, size_t node_limit = 1000000) {
  std::set<PlacticBiword> seen{q};
  std::deque<PlacticBiword> frontier{q};
  while (!frontier.empty()) {
    PlacticBiword cur = frontier.front();
    frontier.pop_front();
    for (auto& [next, move] : knuth_neighbors(cur)) {
      if (seen.count(next)) continue;
      if (seen.size() >= node_limit) fail(errc::class_overflow, "knuth class exceeds the node limit");
      seen.insert(next);
      frontier.push_back(next);
    }
  }
  return seen;
}

// words(D): every plactic biword inserting to D. Enumerates label-decreasing
// biwords of length l(perm) with labels below the window size, pruning by
// Bruhat order.
inline std::set<PlacticBiword> fiber(const BPD& d) {
  Permutation target = validate(d);
  BPD dn = d.normalized();
  int len = static_cast<int>(target.length());
  int maxk = std::max(1, std::max(target.size(), dn.n()) - 1);
  std::set<PlacticBiword> out;
  std::vector<Biletter> cur;
  auto rec = [&](auto&& self, const BPD& partial, const Permutation& p, int last_k) -> void {
    if (static_cast<int>(cur.size()) == len) {
      if (partial == dn) out.insert(PlacticBiword(cur));
      return;
    }
    for (int k = std::min(last_k, maxk); k >= 1; --k)
      for (int a = 1; a <= k; ++a) {
        InsertionOutcome o = right_insert(partial, Biletter(a, k));
        Permutation q = validate(o.result);
        if (!bruhat_leq(q, target)) continue;
        cur.emplace_back(a, k);
        self(self, o.result, q, k);
        cur.pop_back();
      }
  };
  rec(rec, BPD::identity(), Permutation::identity(), maxk);
  return out;
}

struct FiberReport {
  std::string bpd;
  size_t fiber_size = 0;
  size_t class_size = 0;
  int diameter = 0;
  bool has_maxword = false;
  bool has_minword = false;
  bool connected = false;
};

struct ConnectivityReport {
  Permutation perm;
  std::vector<FiberReport> fibers;
  bool all_connected = true;
};

// Theorem check at desk scale: for every D in BPD(p), words(D) is one Knuth
// component containing the maxword and the minword.
inline ConnectivityReport verify_connectivity(const Permutation& p) {
  ConnectivityReport rep;
  rep.perm = p;
  for (const BPD& d : all_bpds(p)) {
    FiberReport fr;
    fr.bpd = d.render();
    std::set<PlacticBiword> f = fiber(d);
    fr.fiber_size = f.size();
    if (!f.empty()) {
      fr.has_maxword = f.count(maxword(d)) > 0;
      fr.has_minword = f.count(minword(d)) > 0;
      // BFS from one member, tracking eccentricity
      std::map<PlacticBiword, int> dist{{*f.begin(), 0}};
      std::deque<PlacticBiword> frontier{*f.begin()};
      while (!frontier.empty()) {
        PlacticBiword cur = frontier.front();
        frontier.pop_front();
        for (auto& [next, move] : knuth_neighbors(cur))
          if (!dist.count(next)) {
            dist[next] = dist[cur] + 1;
            fr.diameter = std::max(fr.diameter, dist[next]);
            frontier.push_back(next);
          }
      }
      fr.class_size = dist.size();
      fr.connected = fr.class_size == fr.fiber_size && fr.has_maxword && fr.has_minword;
      for (const auto& [w, dd] : dist)
        if (!f.count(w)) fr.connected = false;  // moves left the fiber
    }
    rep.all_connected = rep.all_connected && fr.connected;
    rep.fibers.push_back(std::move(fr));
  }
  return rep;
}

}  // namespace pipedream
