#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "pipedream/insertion.hpp"

using namespace pipedream;

namespace {

const PlacticBiword kMaxword({7, 6, 5, 4, 2, 1, 2, 1, 3, 2}, {7, 7, 7, 7, 7, 7, 6, 6, 4, 4});
const PlacticBiword kMinword({7, 2, 6, 5, 1, 2, 4, 1, 3, 2}, {7, 6, 6, 5, 4, 4, 4, 3, 3, 2});

// The paper's maxword chain, with the cover-forced correction of its third
// step (printed 12346875 is not a Bruhat cover of 12345786).
const std::vector<std::string> kMaxChain = {
    "12345678", "12345687", "12345786", "12346785", "12356784", "12456783",
    "13456782", "13456872", "13457862", "13475862", "13574862"};

const std::vector<std::string> kMinChain = {
    "12345678", "13245678", "13425678", "13524678", "13542678", "13562478",
    "13572468", "13574268", "13574628", "13574826", "13574862"};

std::vector<Permutation> chain_perms(const DecoratedChain& ch) { return ch.elements(); }

// All plactic biwords of given length with labels <= maxk.
void gen_biwords(int len, int maxk, std::vector<Biletter>& cur, std::vector<PlacticBiword>& out) {
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

std::vector<PlacticBiword> all_plactic_biwords(int len, int maxk) {
  std::vector<PlacticBiword> out;
  std::vector<Biletter> cur;
  gen_biwords(len, maxk, cur, out);
  return out;
}

}  // namespace

TEST_CASE("single biletter insertion into the identity") {
  for (int k = 1; k <= 4; ++k)
    for (int b = 1; b <= k; ++b) {
      InsertionOutcome r = right_insert(BPD::identity(), Biletter(b, k));
      InsertionOutcome l = left_insert(Biletter(b, k), BPD::identity());
      CHECK(r.result == l.result);
      CHECK(r.cover.alpha == k);
      CHECK(r.cover.beta == k + 1);
      const BPD& d = r.result;
      CHECK(d.at(b, b) == Tile::Blank);
      CHECK(d.at(k + 1, k + 1) == Tile::Cross);
      for (int i = b + 1; i <= k; ++i) CHECK(d.at(i, i) == Tile::JElbow);
      std::vector<int> c(static_cast<size_t>(k), 0);
      c[static_cast<size_t>(k) - 1] = 1;
      CHECK(validate(d) == perm_from_code(c));
    }
}

TEST_CASE("weight multiplies by x_a on every insertion step") {
  for (const auto& q : all_plactic_biwords(3, 3)) {
    BPD d = BPD::identity();
    for (auto it = q.biletters().rbegin(); it != q.biletters().rend(); ++it) {
      std::vector<int> before = weight(d);
      InsertionOutcome o = left_insert(*it, d);
      std::vector<int> after = weight(o.result);
      before.resize(std::max(before.size(), after.size()), 0);
      after.resize(before.size(), 0);
      ++before[static_cast<size_t>(it->a) - 1];
      CHECK(before == after);
      CHECK(o.cover.alpha <= it->k);
      CHECK(o.cover.beta > it->k);
      d = o.result;
    }
  }
}

TEST_CASE("phi of the empty biword is the identity bpd") {
  CHECK(phi(PlacticBiword{}) == BPD::identity());
}

TEST_CASE("paper maxword: phi, chain and reconstruction") {
  auto [d_left, chl] = insert_left_with_chain(kMaxword);
  auto [d_right, chr] = insert_right_with_chain(kMaxword);
  CHECK(d_left == d_right);
  CHECK(validate(d_right) == Permutation::parse("13574862"));

  auto perms = chain_perms(chr);
  REQUIRE(perms.size() == kMaxChain.size());
  for (size_t i = 0; i < perms.size(); ++i) CHECK(perms[i] == Permutation::parse(kMaxChain[i]));
  CHECK(chr.labels() == std::vector<int>{7, 7, 7, 7, 7, 7, 6, 6, 4, 4});

  CHECK(maxword_chain(Permutation::parse("13574862")) == chr);
  CHECK(maxword(d_right) == kMaxword);
}

TEST_CASE("paper minword: phi, chain and reconstruction") {
  BPD d = phi(kMaxword);
  auto [d2, chl] = insert_left_with_chain(kMinword);
  CHECK(d2 == d);  // maxword and minword insert to the same bpd

  auto perms = chain_perms(chl);
  REQUIRE(perms.size() == kMinChain.size());
  for (size_t i = 0; i < perms.size(); ++i) CHECK(perms[i] == Permutation::parse(kMinChain[i]));
  CHECK(chl.labels() == std::vector<int>{2, 3, 3, 4, 4, 4, 5, 6, 6, 7});

  CHECK(minword_chain(Permutation::parse("13574862")) == chl);
  CHECK(minword(d) == kMinword);
}

TEST_CASE("maxword and minword of simple bpds") {
  CHECK(maxword(BPD::identity()).empty());
  CHECK(minword(BPD::identity()).empty());
  for (int k = 1; k <= 3; ++k)
    for (int b = 1; b <= k; ++b) {
      BPD d = right_insert(BPD::identity(), Biletter(b, k)).result;
      CHECK(maxword(d) == PlacticBiword({b}, {k}));
      CHECK(minword(d) == PlacticBiword({b}, {k}));
    }
}

TEST_CASE("grassmannian reduction: right insertion is row insertion") {
  // phi of a k-biword is the bpd of its insertion tableau, and one more
  // right insertion tracks Schensted row insertion
  for (int k = 1; k <= 3; ++k) {
    std::vector<Word> words{{}};
    for (int len = 0; len < 4; ++len) {
      std::vector<Word> next;
      for (const auto& w : words) {
        BPD d = BPD::identity();
        for (int x : w) d = right_insert(d, Biletter(x, k)).result;
        SSYT t = insert_word(w);
        if (!w.empty()) {
          Permutation p = validate(d);
          CHECK(is_grassmannian(p));
          CHECK(Shape(shape_of(p)) == t.shape());
          CHECK(grassmannian_to_ssyt(d, k) == t);
        }
        for (int a = 1; a <= k; ++a) {
          BPD d2 = right_insert(d, Biletter(a, k)).result;
          SSYT t2 = row_insert(t, a).first;
          CHECK(grassmannian_to_ssyt(d2, k) == t2);
          Word w2 = w;
          w2.push_back(a);
          next.push_back(w2);
        }
      }
      words = std::move(next);
    }
  }
}

TEST_CASE("grassmannian reduction: left insertion is column insertion") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<Word> words{{}};
    for (int len = 0; len < 4; ++len) {
      std::vector<Word> next;
      for (const auto& w : words) {
        // build phi(<w/k>) by right insertion, then left-insert one letter
        BPD d = BPD::identity();
        for (int x : w) d = right_insert(d, Biletter(x, k)).result;
        SSYT t = insert_word(w);
        for (int a = 1; a <= k; ++a) {
          BPD d2 = left_insert(Biletter(a, k), d).result;
          SSYT t2 = column_insert(a, t).first;
          CHECK(grassmannian_to_ssyt(d2, k) == t2);
          Word w2 = w;
          w2.push_back(a);
          next.push_back(w2);
        }
      }
      words = std::move(next);
    }
  }
}

TEST_CASE("ssyt_to_bpd round trips with grassmannian_to_ssyt") {
  // single cell: bpd of s_k with blank at (b,b)
  for (int k = 1; k <= 4; ++k)
    for (int b = 1; b <= k; ++b) {
      BPD d = ssyt_to_bpd(SSYT({{b}}), k);
      CHECK(d.at(b, b) == Tile::Blank);
      CHECK(d.at(k + 1, k + 1) == Tile::Cross);
      CHECK(grassmannian_to_ssyt(d, k) == SSYT({{b}}));
    }
  // all shapes of the 3 bpds of s_3 with lambda = (1)
  Permutation s3 = perm_from_code({0, 0, 1});
  auto bs = all_bpds(s3);
  REQUIRE(bs.size() == 3);
  std::set<SSYT> tabs;
  for (const auto& d : bs) tabs.insert(grassmannian_to_ssyt(d, 3));
  CHECK(tabs == std::set<SSYT>{SSYT({{1}}), SSYT({{2}}), SSYT({{3}})});
  CHECK_THROWS_AS(ssyt_to_bpd(SSYT({{3}}), 2), error);
}

TEST_CASE("associativity: all build orders agree on plactic biwords") {
  // every way of growing a consecutive subword, left insertions on the left
  // end and right insertions on the right end
  for (const auto& q : all_plactic_biwords(4, 4)) {
    const auto& bs = q.biletters();
    int len = static_cast<int>(bs.size());
    BPD expect = phi(q);
    for (int start = 0; start < len; ++start) {
      // grow [start, start] outward; enumerate interleavings by bitmask over
      // the remaining len-1 extensions: 1 = extend left, 0 = extend right
      int lefts = start, rights = len - 1 - start;
      for (int mask = 0; mask < (1 << (len - 1)); ++mask) {
        int bits = 0;
        for (int t = 0; t < len - 1; ++t)
          if (mask & (1 << t)) ++bits;
        if (bits != lefts) continue;
        int lo = start, hi = start;
        BPD d = BPD::identity();
        d = left_insert(bs[static_cast<size_t>(start)], d).result;
        bool ok = true;
        for (int t = 0; t < len - 1 && ok; ++t) {
          if (mask & (1 << t)) {
            if (lo == 0) { ok = false; break; }
            --lo;
            d = left_insert(bs[static_cast<size_t>(lo)], d).result;
          } else {
            if (hi == len - 1) { ok = false; break; }
            ++hi;
            d = right_insert(d, bs[static_cast<size_t>(hi)]).result;
          }
        }
        if (!ok) continue;
        CHECK(d == expect);
      }
    }
  }
}

TEST_CASE("monk bijectivity on S4") {
  auto perms4 = all_permutations(4);
  for (const auto& p : perms4) {
    auto dset = all_bpds(p);
    for (int k = 1; k <= 3; ++k) {
      // union of BPD(p') over mixed k-covers p <:_k p'
      std::map<std::string, int> targets;
      for (const auto& cd : k_bruhat_covers(p, k)) {
        Permutation q = p.with_swapped_positions(cd.alpha, cd.beta);
        for (const auto& d : all_bpds(q)) ++targets[d.render()];
      }
      std::map<std::string, int> hits;
      for (const auto& d : dset)
        for (int a = 1; a <= k; ++a) {
          InsertionOutcome o = right_insert(d, Biletter(a, k));
          ++hits[o.result.render()];
          // weight multiplies by x_a
          std::vector<int> wb = weight(d), wa = weight(o.result);
          wb.resize(std::max(wb.size(), wa.size()), 0);
          wa.resize(wb.size(), 0);
          ++wb[static_cast<size_t>(a) - 1];
          CHECK(wb == wa);
        }
      CHECK(hits == targets);
      for (const auto& [key, count] : hits) CHECK(count == 1);
    }
  }
}

TEST_CASE("inverse insertion round trips") {
  for (const auto& q : all_plactic_biwords(3, 3)) {
    auto [d, chl] = insert_left_with_chain(q);
    CHECK(inverse_left(d, chl) == q);
    auto [d2, chr] = insert_right_with_chain(q);
    CHECK(inverse_right(d2, chr) == q);
  }
}

TEST_CASE("inverse insertion rejects mismatched chains") {
  auto [d, ch] = insert_left_with_chain(PlacticBiword({1, 1}, {2, 2}));
  DecoratedChain bad = ch;
  bad.steps.pop_back();
  CHECK_THROWS_AS(inverse_left(d, bad), error);
}

TEST_CASE("left-absorb lemma at desk scale") {
  // for a k-biword Q: column-inserting a into S(a-word) adds no new row
  // iff left-inserting <a/k+1> into phi(Q) makes no descent at k+1
  int k = 2;
  std::vector<Word> words{{}};
  for (int len = 0; len < 4; ++len) {
    std::vector<Word> next;
    for (const auto& w : words) {
      if (!w.empty()) {
        BPD d = BPD::identity();
        for (int x : w) d = right_insert(d, Biletter(x, k)).result;
        SSYT t = insert_word(w);
        for (int a = 1; a <= k; ++a) {
          bool no_new_row = column_insert(a, t).first.row_count() == t.row_count();
          Permutation after = validate(left_insert(Biletter(a, k + 1), d).result);
          bool no_descent_at_k1 = true;
          for (int dd : descents(after))
            if (dd == k + 1) no_descent_at_k1 = false;
          CHECK(no_new_row == no_descent_at_k1);
        }
      }
      for (int a = 1; a <= k; ++a) {
        Word w2 = w;
        w2.push_back(a);
        next.push_back(w2);
      }
    }
    words = std::move(next);
  }
}

TEST_CASE("phi of a k-biword is the bpd of its insertion tableau") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<Word> words{{}};
    for (int len = 0; len < 4; ++len) {
      std::vector<Word> next;
      for (const auto& w : words)
        for (int a = 1; a <= k; ++a) {
          Word w2 = w;
          w2.push_back(a);
          next.push_back(w2);
        }
      words = std::move(next);
    }
    for (const auto& w : words) {
      if (w.empty()) continue;
      std::vector<Biletter> bs;
      for (int a : w) bs.emplace_back(a, k);
      BPD d = phi(PlacticBiword(bs));
      SSYT t = insert_word(w);
      CHECK(d == ssyt_to_bpd(t, k));
      Permutation p = validate(d);
      CHECK(is_grassmannian(p));
      CHECK(shape_of(p) == t.shape().parts);
    }
  }
}

TEST_CASE("a maximal k-block factors through h of the permutation") {
  // if phi(Q1 Q2) = D with Q2 a k-biword of length l(h(pi)), every label in
  // Q1 exceeds k and phi(Q2) lies in BPD(h(pi))
  for (const auto& q : all_plactic_biwords(4, 4)) {
    BPD d = phi(q);
    Permutation p = validate(d);
    if (p.is_identity()) continue;
    int k = q.biletters().back().k;
    // split off the maximal trailing k-block
    size_t cut = q.size();
    while (cut > 0 && q[cut - 1].k == k) --cut;
    Permutation hp = h(p);
    if (q.size() - cut != static_cast<size_t>(hp.length())) continue;
    if (d1(p) != k) continue;
    for (size_t i = 0; i < cut; ++i) CHECK(q[i].k > k);
    std::vector<Biletter> tail(q.biletters().begin() + static_cast<long>(cut), q.biletters().end());
    BPD d2 = phi(PlacticBiword(tail));
    CHECK(validate(d2) == hp);
  }
}

TEST_CASE("weight multiplies by x_a for random S5 diagrams") {
  std::mt19937 rng(7);
  auto perms = all_permutations(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation& p = perms[rng() % perms.size()];
    auto ds = all_bpds(p);
    const BPD& d = ds[rng() % ds.size()];
    int k = 1 + static_cast<int>(rng() % 4);
    int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
    InsertionOutcome o = rng() % 2 ? right_insert(d, Biletter(a, k)) : left_insert(Biletter(a, k), d);
    std::vector<int> wb = weight(d), wa = weight(o.result);
    wb.resize(std::max(wb.size(), wa.size()), 0);
    wa.resize(wb.size(), 0);
    ++wb[static_cast<size_t>(a) - 1];
    CHECK(wb == wa);
    CHECK(o.cover.alpha <= k);
    CHECK(o.cover.beta > k);
  }
}
