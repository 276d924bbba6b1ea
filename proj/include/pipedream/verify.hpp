#pragma once

#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pipedream/insertion.hpp"
#include "pipedream/knuth.hpp"
#include "pipedream/schubert.hpp"

namespace pipedream {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace verify_detail {

inline const PlacticBiword& paper_maxword() {
  static const PlacticBiword q({7, 6, 5, 4, 2, 1, 2, 1, 3, 2}, {7, 7, 7, 7, 7, 7, 6, 6, 4, 4});
  return q;
}

inline const PlacticBiword& paper_minword() {
  static const PlacticBiword q({7, 2, 6, 5, 1, 2, 4, 1, 3, 2}, {7, 6, 6, 5, 4, 4, 4, 3, 3, 2});
  return q;
}

// The printed maxword chain, third step corrected to the value forced by the
// Bruhat cover requirement (the paper prints 12346875 there).
inline std::vector<std::string> paper_max_chain() {
  return {"12345678", "12345687", "12345786", "12346785", "12356784", "12456783",
          "13456782", "13456872", "13457862", "13475862", "13574862"};
}

inline std::vector<std::string> paper_min_chain() {
  return {"12345678", "13245678", "13425678", "13524678", "13542678", "13562478",
          "13572468", "13574268", "13574628", "13574826", "13574862"};
}

inline bool chain_matches(const DecoratedChain& ch, const std::vector<std::string>& expect) {
  auto es = ch.elements();
  if (es.size() != expect.size()) return false;
  for (size_t i = 0; i < es.size(); ++i)
    if (!(es[i] == Permutation::parse(expect[i]))) return false;
  return true;
}

// Bidirectional BFS through the generalized Knuth graph.
inline bool knuth_path_exists(const PlacticBiword& from, const PlacticBiword& to, size_t cap = 2000000) {
  if (from == to) return true;
  std::set<PlacticBiword> a{from}, b{to};
  std::deque<PlacticBiword> fa{from}, fb{to};
  while (!fa.empty() && !fb.empty()) {
    auto& frontier = fa.size() <= fb.size() ? fa : fb;
    auto& mine = fa.size() <= fb.size() ? a : b;
    auto& other = fa.size() <= fb.size() ? b : a;
    std::deque<PlacticBiword> next;
    while (!frontier.empty()) {
      PlacticBiword cur = frontier.front();
      frontier.pop_front();
      for (auto& [w, m] : knuth_neighbors(cur)) {
        if (other.count(w)) return true;
        if (mine.insert(w).second) {
          if (mine.size() > cap) return false;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

void gen_biwords(int len, int maxk, std::vector<Biletter>& cur, std::vector<PlacticBiword>& out);

inline void gen_biwords(int len, int maxk, std::vector<Biletter>& cur, std::vector<PlacticBiword>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.emplace_back(cur);
    return;
  }
  int hi = cur.empty() ? maxk : cur.back().k;
  for (int k = hi; k >= 1; --k)
    for (int a = 1; a <= k; ++a) {
      cur.emplace_back(a, k);
      gen_biwords(len, maxk, cur, out);
      cur.pop_back();
    }
}

inline std::vector<PlacticBiword> all_plactic_biwords(int len, int maxk) {
  std::vector<PlacticBiword> out;
  std::vector<Biletter> cur;
  gen_biwords(len, maxk, cur, out);
  return out;
}

template <class F>
CriterionResult timed(int id, const std::string& name, F&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::string detail;
    r.pass = body(detail);
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace verify_detail

// 1. Paper-example fidelity: maxword/minword and both recording chains for
// pi = 13574862, byte-exact (chain step 3 corrected per the cover rule).
inline CriterionResult verify_paper_examples() {
  using namespace verify_detail;
  return timed(1, "paper maxword/minword fidelity", [](std::string& detail) {
    const Permutation pi = Permutation::parse("13574862");
    auto [d_r, chr] = insert_right_with_chain(paper_maxword());
    auto [d_l, chl_max] = insert_left_with_chain(paper_maxword());
    if (!(d_r == d_l)) return false;
    if (!(validate(d_r) == pi)) return false;
    if (!chain_matches(chr, paper_max_chain())) return false;
    if (!(maxword(d_r) == paper_maxword())) return false;
    auto [d_min, chl] = insert_left_with_chain(paper_minword());
    if (!(d_min == d_r)) return false;
    if (!chain_matches(chl, paper_min_chain())) return false;
    if (!(minword(d_r) == paper_minword())) return false;
    detail = "maxword, minword and both chains reproduced";
    return true;
  });
}

// 2. The worked example: appending <1/4> to the maxword.
inline CriterionResult verify_worked_example() {
  using namespace verify_detail;
  return timed(2, "worked equivalence example", [](std::string& detail) {
    PlacticBiword q = paper_maxword().concat(PlacticBiword({1}, {4}));
    BPD d = phi(q);
    PlacticBiword target({7, 6, 5, 4, 3, 2, 1, 2, 1, 2, 1}, {7, 7, 7, 7, 7, 7, 7, 6, 6, 4, 4});
    if (!(maxword(d) == target)) return false;
    if (!(phi(target) == d)) return false;
    if (!knuth_path_exists(q, target)) return false;
    detail = "maxword of the extended word matches and a move path exists";
    return true;
  });
}

// 3. Connectivity of every fiber over S4, plus random S5 spot checks.
inline CriterionResult verify_connectivity_desk(int max_n = 4, int spot_checks = 10, unsigned seed = 20240817) {
  using namespace verify_detail;
  return timed(3, "fiber connectivity", [=](std::string& detail) {
    size_t fibers = 0;
    for (const auto& p : all_permutations(max_n)) {
      ConnectivityReport rep = verify_connectivity(p);
      if (!rep.all_connected) {
        detail = "disconnected fiber at " + p.str();
        return false;
      }
      fibers += rep.fibers.size();
    }
    std::mt19937 rng(seed);
    auto s5 = all_permutations(5);
    std::vector<Permutation> pool;
    for (const auto& p : s5)
      if (p.length() <= 6) pool.push_back(p);
    std::shuffle(pool.begin(), pool.end(), rng);
    int done = 0;
    for (const auto& p : pool) {
      if (done == spot_checks) break;
      ConnectivityReport rep = verify_connectivity(p);
      if (!rep.all_connected) {
        detail = "disconnected fiber at " + p.str();
        return false;
      }
      fibers += rep.fibers.size();
      ++done;
    }
    detail = std::to_string(fibers) + " fibers all connected with maxword and minword present";
    return true;
  });
}

// 4. Associativity of insertion over all build orders.
inline CriterionResult verify_associativity(int max_len = 4, int max_label = 4) {
  using namespace verify_detail;
  return timed(4, "insertion order independence", [=](std::string& detail) {
    long orders = 0;
    for (int len = 1; len <= max_len; ++len)
      for (const auto& q : all_plactic_biwords(len, max_label)) {
        const auto& bs = q.biletters();
        BPD expect = phi(q);
        for (int start = 0; start < len; ++start)
          for (int mask = 0; mask < (1 << (len - 1)); ++mask) {
            int bits = 0;
            for (int t = 0; t < len - 1; ++t)
              if (mask & (1 << t)) ++bits;
            if (bits != start) continue;
            int lo = start, hi = start;
            BPD d = left_insert(bs[static_cast<size_t>(start)], BPD::identity()).result;
            for (int t = 0; t < len - 1; ++t) {
              if (mask & (1 << t))
                d = left_insert(bs[static_cast<size_t>(--lo)], d).result;
              else
                d = right_insert(d, bs[static_cast<size_t>(++hi)]).result;
            }
            ++orders;
            if (!(d == expect)) {
              detail = "order disagreement at " + q.str();
              return false;
            }
          }
      }
    detail = std::to_string(orders) + " build orders agree";
    return true;
  });
}

// 5. Every generalized Knuth move preserves phi.
inline CriterionResult verify_move_soundness(int max_len = 4, int max_label = 4) {
  using namespace verify_detail;
  return timed(5, "knuth moves preserve phi", [=](std::string& detail) {
    long edges = 0;
    for (int len = 2; len <= max_len; ++len)
      for (const auto& q : all_plactic_biwords(len, max_label)) {
        BPD d = phi(q);
        for (const auto& [w, m] : knuth_neighbors(q)) {
          ++edges;
          if (!(phi(w) == d)) {
            detail = "phi changed along a move at " + q.str();
            return false;
          }
        }
      }
    detail = std::to_string(edges) + " move edges preserve phi";
    return true;
  });
}

// 6. Oracle equivalence: schubert sums and enumeration.
inline CriterionResult verify_oracles() {
  using namespace verify_detail;
  return timed(6, "schubert and enumeration oracles", [](std::string& detail) {
    for (const auto& p : all_permutations(5))
      if (!(schubert_bpd(p) == schubert_divdiff(p, 5))) {
        detail = "schubert mismatch at " + p.str();
        return false;
      }
    auto oracle4 = all_bpds_exhaustive(4);
    for (const auto& p : all_permutations(4))
      if (!(all_bpds(p) == oracle4[p])) {
        detail = "enumeration mismatch at " + p.str();
        return false;
      }
    auto oracle5 = all_bpds_exhaustive(5);
    for (const auto& p : all_permutations(5))
      if (!(all_bpds(p) == oracle5[p])) {
        detail = "enumeration mismatch at " + p.str();
        return false;
      }
    detail = "divided differences and exhaustive search agree on S5";
    return true;
  });
}

// 7. Monk bijectivity with multiplicative weights on S4.
inline CriterionResult verify_monk(int max_n = 4) {
  using namespace verify_detail;
  return timed(7, "monk bijection", [=](std::string& detail) {
    for (const auto& p : all_permutations(max_n)) {
      auto dset = all_bpds(p);
      for (int k = 1; k < max_n; ++k) {
        std::map<std::string, int> targets;
        for (const auto& cd : k_bruhat_covers(p, k))
          for (const auto& d : all_bpds(p.with_swapped_positions(cd.alpha, cd.beta))) ++targets[d.render()];
        std::map<std::string, int> hits;
        for (const auto& d : dset)
          for (int a = 1; a <= k; ++a) {
            InsertionOutcome o = right_insert(d, Biletter(a, k));
            ++hits[o.result.render()];
            std::vector<int> wb = weight(d), wa = weight(o.result);
            wb.resize(std::max(wb.size(), wa.size()), 0);
            wa.resize(wb.size(), 0);
            ++wb[static_cast<size_t>(a) - 1];
            if (wb != wa) {
              detail = "weight not multiplicative at " + p.str();
              return false;
            }
          }
        if (hits != targets) {
          detail = "bijection failed at " + p.str() + " k=" + std::to_string(k);
          return false;
        }
        for (const auto& [key, c] : hits)
          if (c != 1) {
            detail = "fiber of size " + std::to_string(c) + " at " + p.str();
            return false;
          }
      }
    }
    detail = "insertion is a weight-multiplicative bijection on S" + std::to_string(max_n);
    return true;
  });
}

// 8. The product identity via chain counting.
inline CriterionResult verify_product_identity(int max_label = 3, int max_len = 4) {
  using namespace verify_detail;
  return timed(8, "chain counting product identity", [=](std::string& detail) {
    long vectors = 0;
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
      std::vector<int> ks = stack.back();
      stack.pop_back();
      if (!ks.empty()) {
        ++vectors;
        IntPolynomial product = IntPolynomial::constant(1);
        for (int k : ks) {
          IntPolynomial sk;
          for (int i = 1; i <= k; ++i) sk += IntPolynomial::variable(i);
          product = product * sk;
        }
        auto expansion = expand_schubert(product);
        long coeff_total = 0;
        for (const auto& [rho, c] : expansion) {
          if (count_chains(rho, ks) != c) {
            detail = "chain count mismatch at rho = " + rho.str();
            return false;
          }
          coeff_total += c;
        }
        long chain_total = 0;
        std::function<void(const Permutation&, size_t)> rec = [&](const Permutation& cur, size_t step) {
          if (step == ks.size()) {
            ++chain_total;
            return;
          }
          for (const CoverData& cd : k_bruhat_covers(cur, ks[step]))
            rec(cur.with_swapped_positions(cd.alpha, cd.beta), step + 1);
        };
        rec(Permutation::identity(), 0);
        if (chain_total != coeff_total) {
          detail = "chain total mismatch";
          return false;
        }
      }
      if (static_cast<int>(ks.size()) < max_len)
        for (int k = 1; k <= max_label; ++k) {
          auto next = ks;
          next.push_back(k);
          stack.push_back(next);
        }
    }
    detail = std::to_string(vectors) + " label vectors verified";
    return true;
  });
}

// 9. Theorem 1.5 on S4, with invariance over the choice of D and chains.
inline CriterionResult verify_separated_descents(int max_n = 4) {
  using namespace verify_detail;
  return timed(9, "separated descent structure constants", [=](std::string& detail) {
    long triples = 0;
    auto perms = all_permutations(max_n);
    for (const auto& p : perms) {
      if (p.is_identity()) continue;
      for (const auto& r : perms) {
        if (r.is_identity()) continue;
        if (d1(p) < d2(r)) continue;
        auto expansion = expand_schubert(schubert_bpd(p) * schubert_bpd(r));
        DecoratedChain ch_pi = admissible_left_chain(p);
        DecoratedChain ch_rho = admissible_right_chain(r);
        for (const auto& [sigma, coeff] : expansion) {
          ++triples;
          long got = separated_descent_constant(p, r, sigma);
          if (got != coeff) {
            detail = "constant mismatch at (" + p.str() + "," + r.str() + "," + sigma.str() + ")";
            return false;
          }
          // invariance across the choice of D in BPD(sigma)
          for (const BPD& d : all_bpds(sigma))
            if (separated_descent_constant_for(p, r, d, ch_pi, ch_rho) != coeff) {
              detail = "constant varies with D at (" + p.str() + "," + r.str() + "," + sigma.str() + ")";
              return false;
            }
        }
      }
    }
    detail = std::to_string(triples) + " separated-descent triples match the expansion";
    return true;
  });
}

inline std::vector<CriterionResult> verify_all(int max_n = 4, unsigned seed = 20240817) {
  std::vector<CriterionResult> out;
  out.push_back(verify_paper_examples());
  out.push_back(verify_worked_example());
  out.push_back(verify_connectivity_desk(std::min(max_n, 4), 10, seed));
  out.push_back(verify_associativity());
  out.push_back(verify_move_soundness());
  out.push_back(verify_oracles());
  out.push_back(verify_monk(std::min(max_n, 4)));
  out.push_back(verify_product_identity());
  out.push_back(verify_separated_descents(std::min(max_n, 4)));
  return out;
}

}  // namespace pipedream
