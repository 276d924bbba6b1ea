#include <doctest.h>

#include <map>
#include <numeric>

#include "pipedream/bpd.hpp"

using namespace pipedream;

TEST_CASE("rothe bpd of small permutations") {
  // the identity normalizes to the empty window; its embedding is the
  // diagonal of r-elbows with horizontals above and verticals below
  CHECK(rothe_bpd(Permutation::identity(), 2).n() == 0);
  CHECK(rothe_bpd(Permutation::identity()).embedded(2).render() == "r-\n|r");
  CHECK(rothe_bpd(Permutation({2, 1})).render() == ".r\nr+");
  BPD d = rothe_bpd(Permutation::parse("13574862"));
  std::vector<int> blanks_per_row(8, 0), crosses_per_row(8, 0);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      if (d.at(i, j) == Tile::Blank) ++blanks_per_row[static_cast<size_t>(i) - 1];
      if (d.at(i, j) == Tile::Cross) ++crosses_per_row[static_cast<size_t>(i) - 1];
    }
  CHECK(blanks_per_row == std::vector<int>{0, 1, 2, 3, 1, 2, 1, 0});
  CHECK(crosses_per_row == std::vector<int>{0, 0, 0, 0, 2, 0, 2, 6});
}

TEST_CASE("rothe blanks and crosses match code and maxcode on S5") {
  for (const auto& p : all_permutations(5)) {
    BPD d = rothe_bpd(p, 5);
    std::vector<int> b(5, 0), c(5, 0);
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        if (d.at(i, j) == Tile::Blank) ++b[static_cast<size_t>(i) - 1];
        if (d.at(i, j) == Tile::Cross) ++c[static_cast<size_t>(i) - 1];
      }
    while (!b.empty() && b.back() == 0) b.pop_back();
    while (!c.empty() && c.back() == 0) c.pop_back();
    CHECK(b == code(p));
    CHECK(c == maxcode(p));
  }
}

TEST_CASE("validate round trips rothe on S5") {
  for (const auto& p : all_permutations(5)) CHECK(validate(rothe_bpd(p)) == p);
}

TEST_CASE("validate rejects broken grids") {
  CHECK(validate(BPD::parse(".r\nr+")) == Permutation({2, 1}));
  CHECK_THROWS_AS(validate(BPD::parse("rr\nr+")), error);      // dangling strand
  CHECK_THROWS_AS(validate(BPD::parse("j-\n|r")), error);      // strand leaves the north edge
  CHECK_THROWS_AS(validate(BPD::parse("..\nrr")), error);      // no exit from row 1
}

TEST_CASE("double crossing is detected") {
  // pipes 1 and 2 cross at (3,2) and again at (2,3)
  BPD d = BPD::parse(
      "..r-\n"
      ".r+-\n"
      "r+jr\n"
      "||r+");
  CHECK_THROWS_AS(validate(d), error);
  try {
    validate(d);
  } catch (const error& e) {
    CHECK(e.code() == errc::double_crossing);
  }
}

TEST_CASE("render parse round trip") {
  BPD d = rothe_bpd(Permutation::parse("13574862"));
  CHECK(BPD::parse(d.render()) == d);
}

TEST_CASE("window normalization") {
  BPD d = rothe_bpd(Permutation({2, 1}), 5);
  CHECK(d.normalized().n() == 2);
  CHECK(d.normalized() == rothe_bpd(Permutation({2, 1})));
  CHECK(BPD::identity(4).normalized().n() == 0);
}

TEST_CASE("weight of rothe is x^code") {
  CHECK(weight(rothe_bpd(Permutation::parse("13574862"))) == std::vector<int>{0, 1, 2, 3, 1, 2, 1});
  CHECK(weight(BPD::identity(3)).empty());
}

TEST_CASE("droops on small cases") {
  CHECK(droops(rothe_bpd(Permutation({2, 1}))).empty());
  Permutation s2 = perm_from_code({0, 1});
  auto ds = droops(rothe_bpd(s2, 3));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].at(1, 1) == Tile::Blank);
  CHECK(ds[0].at(2, 2) == Tile::JElbow);
  CHECK(ds[0].at(3, 3) == Tile::Cross);
}

TEST_CASE("all_bpds of s_k has k elements with diagonal blanks") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> c(static_cast<size_t>(k), 0);
    c[static_cast<size_t>(k) - 1] = 1;
    Permutation sk = perm_from_code(c);
    auto bs = all_bpds(sk);
    REQUIRE(static_cast<int>(bs.size()) == k);
    std::set<std::pair<int, int>> blanks;
    for (const auto& d : bs) {
      auto bl = d.blanks();
      REQUIRE(bl.size() == 1);
      blanks.insert(bl[0]);
    }
    for (int b = 1; b <= k; ++b) CHECK(blanks.count({b, b}) == 1);
  }
}

TEST_CASE("droop closure equals exhaustive enumeration for n = 4") {
  auto oracle = all_bpds_exhaustive(4);
  long total = 0;
  for (const auto& p : all_permutations(4)) {
    auto closure = all_bpds(p);
    auto it = oracle.find(p);
    REQUIRE(it != oracle.end());
    CHECK(closure == it->second);
    total += static_cast<long>(closure.size());
  }
  // edge-consistent tilings are counted by ASM numbers; exactly one 4x4
  // tiling is non-reduced, so 41 reduced diagrams remain
  CHECK(count_tilings(3) == 7);
  CHECK(count_tilings(4) == 42);
  CHECK(total == 41);
}

TEST_CASE("identity has exactly one bpd") {
  CHECK(all_bpds(Permutation::identity()).size() == 1);
}

TEST_CASE("reducedness across enumerated bpds") {
  for (const auto& p : all_permutations(4))
    for (const auto& d : all_bpds(p)) CHECK(validate(d) == p);
}

TEST_CASE("blank count equals length across enumerated bpds") {
  for (const auto& p : all_permutations(4))
    for (const auto& d : all_bpds(p)) CHECK(static_cast<long>(d.blanks().size()) == p.length());
}
