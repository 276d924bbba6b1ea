#include <doctest.h>

#include <numeric>
#include <set>

#include "pipedream/permutation.hpp"

using namespace pipedream;

namespace {
const Permutation kPi = Permutation::parse("13574862");
}

TEST_CASE("window normalization and equality") {
  CHECK(Permutation({2, 1, 3, 4}) == Permutation({2, 1}));
  CHECK(Permutation({1, 2, 3}).is_identity());
  CHECK(Permutation::parse("13574862").window() == std::vector<int>{1, 3, 5, 7, 4, 8, 6, 2});
  CHECK(Permutation::parse("2,1,3").str() == "21");
  CHECK_THROWS_AS(Permutation({1, 1}), error);
}

TEST_CASE("code of the running example") {
  CHECK(code(kPi) == std::vector<int>{0, 1, 2, 3, 1, 2, 1});
  CHECK(code(Permutation::identity()).empty());
  CHECK(code(Permutation({2, 1})) == std::vector<int>{1});
}

TEST_CASE("maxcode of the running example") {
  CHECK(maxcode(kPi) == std::vector<int>{0, 0, 0, 0, 2, 0, 2, 6});
  CHECK(maxcode(Permutation::identity()).empty());
  CHECK(maxcode(Permutation({2, 1})) == std::vector<int>{0, 1});
}

TEST_CASE("perm_from_code") {
  CHECK(perm_from_code({0, 1, 2, 3, 1, 2, 1}) == kPi);
  CHECK(perm_from_code({}).is_identity());
  CHECK(perm_from_code({0, 0, 1}) == Permutation({1, 2, 4, 3}));
  for (const auto& p : all_permutations(6)) CHECK(perm_from_code(code(p)) == p);
}

TEST_CASE("descents and d1 d2") {
  CHECK(d1(kPi) == 4);
  CHECK(d2(kPi) == 7);
  CHECK(descents(Permutation({3, 2, 1})) == std::vector<int>{1, 2});
  Permutation s3 = perm_from_code({0, 0, 1});
  CHECK(d1(s3) == 3);
  CHECK(d2(s3) == 3);
  CHECK_THROWS_AS(d1(Permutation::identity()), error);
}

TEST_CASE("length equals code sum and maxcode sum") {
  for (const auto& p : all_permutations(6)) {
    auto c = code(p), m = maxcode(p);
    long cs = std::accumulate(c.begin(), c.end(), 0L);
    long ms = std::accumulate(m.begin(), m.end(), 0L);
    CHECK(cs == p.length());
    CHECK(ms == p.length());
  }
}

TEST_CASE("cover_up basics") {
  CHECK(cover_up(Permutation::identity(), 1, 2).m_alpha == 0);
  CHECK_THROWS_AS(cover_up(Permutation::identity(), 1, 3), error);
  // 13254 t_{13} = 23154
  Permutation p({1, 3, 2, 5, 4});
  CHECK(is_cover(p, 1, 3));
  CHECK(p.with_swapped_positions(1, 3) == Permutation({2, 3, 1, 5, 4}));
}

TEST_CASE("code and maxcode transition under covers, exhaustively in S5") {
  auto pad = [](std::vector<int> v, size_t m) {
    v.resize(m, 0);
    return v;
  };
  for (const auto& p : all_permutations(5)) {
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 6; ++b) {
        if (!is_cover(p, a, b)) continue;
        CoverData cd = cover_up(p, a, b);
        Permutation q = p.with_swapped_positions(a, b);
        auto cp = pad(code(p), 8), cq = pad(code(q), 8);
        auto mp = pad(maxcode(p), 8), mq = pad(maxcode(q), 8);
        for (int i = 1; i <= 8; ++i) {
          if (i == a) {
            CHECK(cq[i - 1] == cp[i - 1] + cd.m_alpha + 1);
            CHECK(mq[i - 1] == mp[i - 1] - cd.m_beta);
          } else if (i == b) {
            CHECK(cq[i - 1] == cp[i - 1] - cd.m_alpha);
            CHECK(mq[i - 1] == mp[i - 1] + cd.m_beta + 1);
          } else {
            CHECK(cq[i - 1] == cp[i - 1]);
            CHECK(mq[i - 1] == mp[i - 1]);
          }
        }
      }
  }
}

TEST_CASE("k_bruhat_covers") {
  auto covers = k_bruhat_covers(Permutation::identity(), 1);
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].alpha == 1);
  CHECK(covers[0].beta == 2);

  auto c213 = k_bruhat_covers(Permutation({2, 1, 3}), 1);
  REQUIRE(c213.size() == 1);
  CHECK(c213[0].alpha == 1);
  CHECK(c213[0].beta == 3);

  // beyond the window: identity with large k
  auto big = k_bruhat_covers(Permutation::identity(), 4);
  std::set<std::pair<int, int>> got;
  for (const auto& c : big) got.insert({c.alpha, c.beta});
  CHECK(got.count({4, 5}) == 1);
}

TEST_CASE("h truncates the code at the first descent") {
  CHECK(h(kPi) == Permutation::parse("13572468"));
  Permutation g = Permutation::parse("13572468");
  CHECK(h(g) == g);
  Permutation s2 = perm_from_code({0, 1});
  CHECK(h(s2) == s2);
  for (const auto& p : all_permutations(5)) {
    if (p.is_identity()) continue;
    Permutation hp = h(p);
    CHECK(is_grassmannian(hp));
    if (!hp.is_identity()) CHECK(d1(hp) == d1(p));
    auto cp = code(p), ch = code(hp);
    for (int i = 1; i <= d1(p); ++i)
      CHECK(ch[static_cast<size_t>(i) - 1] == cp[static_cast<size_t>(i) - 1]);
  }
}

TEST_CASE("delta reproduces the printed minword chain") {
  std::vector<std::string> expect = {"12345678", "13245678", "13425678", "13524678",
                                     "13542678", "13562478", "13572468", "13574268",
                                     "13574628", "13574826", "13574862"};
  Permutation cur = Permutation::identity();
  CHECK(cur.window_padded(8) == Permutation::parse(expect[0]).window_padded(8));
  for (size_t i = 1; i < expect.size(); ++i) {
    cur = delta(cur, kPi);
    CHECK(cur == Permutation::parse(expect[i]));
  }
  CHECK(cur == kPi);
  CHECK(delta(Permutation::identity(), perm_from_code({0, 0, 1})) == perm_from_code({0, 0, 1}));
  CHECK_THROWS_AS(delta(kPi, kPi), error);
}

TEST_CASE("grassmannian shape round trips") {
  CHECK(shape_of(Permutation::parse("13572468")) == std::vector<int>{3, 2, 1});
  CHECK(shape_of(Permutation::identity()).empty());
  CHECK(shape_of(perm_from_code({0, 1})) == std::vector<int>{1});
  CHECK(grassmannian_from_shape({3, 2, 1}, 4) == Permutation::parse("13572468"));
  CHECK_THROWS_AS(shape_of(Permutation({3, 2, 1})), error);
  for (const auto& p : all_permutations(5)) {
    if (!is_grassmannian(p) || p.is_identity()) continue;
    CHECK(grassmannian_from_shape(shape_of(p), d1(p)) == p);
  }
}

TEST_CASE("bruhat order sanity") {
  CHECK(bruhat_leq(Permutation::identity(), kPi));
  CHECK(!bruhat_leq(kPi, Permutation::identity()));
  for (const auto& p : all_permutations(4))
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b)
        if (is_cover(p, a, b)) CHECK(bruhat_leq(p, p.with_swapped_positions(a, b)));
}
