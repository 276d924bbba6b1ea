#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pipedream/error.hpp"

namespace pipedream {

// Partition shape with conjugate access.
struct Shape {
  std::vector<int> parts;  // weakly decreasing, no trailing zeros

  Shape() = default;
  Shape(std::initializer_list<int> p) : Shape(std::vector<int>(p)) {}
  explicit Shape(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] < parts[i + 1]) fail(errc::bad_input, "parts not weakly decreasing");
  }

  int rows() const { return static_cast<int>(parts.size()); }
  int cells() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }

  Shape conjugate() const {
    std::vector<int> c;
    for (int j = 1; parts.size() && j <= parts[0]; ++j) {
      int h = 0;
      for (int p : parts)
        if (p >= j) ++h;
      c.push_back(h);
    }
    return Shape(std::move(c));
  }

  friend bool operator==(const Shape&, const Shape&) = default;
};

using Word = std::vector<int>;

// Semistandard Young tableau: weakly increasing rows, strictly increasing
// columns.
class SSYT {
 public:
  SSYT() = default;
  SSYT(std::initializer_list<std::vector<int>> rows) : SSYT(std::vector<std::vector<int>>(rows)) {}
  explicit SSYT(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) { check(); }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int row_count() const { return static_cast<int>(rows_.size()); }

  Shape shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Shape(std::move(p));
  }

  int at(int r, int c) const { return rows_[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1]; }

  friend bool operator==(const SSYT&, const SSYT&) = default;
  friend auto operator<=>(const SSYT&, const SSYT&) = default;

  std::string str() const {
    std::string s;
    for (const auto& r : rows_) {
      for (size_t j = 0; j < r.size(); ++j) s += (j ? " " : "") + std::to_string(r[j]);
      s += "\n";
    }
    return s;
  }

 private:
  void check() const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].empty()) fail(errc::bad_input, "empty tableau row");
      if (i + 1 < rows_.size() && rows_[i + 1].size() > rows_[i].size())
        fail(errc::bad_input, "row lengths not weakly decreasing");
      for (size_t j = 0; j + 1 < rows_[i].size(); ++j)
        if (rows_[i][j] > rows_[i][j + 1]) fail(errc::bad_input, "row not weakly increasing");
      for (size_t j = 0; i + 1 < rows_.size() && j < rows_[i + 1].size(); ++j)
        if (rows_[i][j] >= rows_[i + 1][j]) fail(errc::bad_input, "column not strictly increasing");
    }
  }

  friend SSYT unchecked_tableau(std::vector<std::vector<int>> rows);
  std::vector<std::vector<int>> rows_;
};

inline SSYT unchecked_tableau(std::vector<std::vector<int>> rows) {
  SSYT t;
  t.rows_ = std::move(rows);
  return t;
}

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Schensted row insertion T <- a. Returns the new tableau and the added cell.
inline std::pair<SSYT, Cell> row_insert(const SSYT& t, int a) {
  auto rows = t.rows();
  int x = a;
  for (size_t i = 0; i < rows.size(); ++i) {
    auto it = std::upper_bound(rows[i].begin(), rows[i].end(), x);
    if (it == rows[i].end()) {
      rows[i].push_back(x);
      Cell cell{static_cast<int>(i) + 1, static_cast<int>(rows[i].size())};
      return {unchecked_tableau(std::move(rows)), cell};
    }
    std::swap(x, *it);
  }
  rows.push_back({x});
  Cell cell{static_cast<int>(rows.size()), 1};
  return {unchecked_tableau(std::move(rows)), cell};
}

// Schensted column insertion a -> T: in each column bump the topmost entry >= a.
inline std::pair<SSYT, Cell> column_insert(int a, const SSYT& t) {
  auto rows = t.rows();
  int x = a;
  for (int j = 0;; ++j) {
    // entries of column j are rows[0][j], rows[1][j], ... (strictly increasing)
    int i = 0;
    while (i < static_cast<int>(rows.size()) && j < static_cast<int>(rows[static_cast<size_t>(i)].size()) &&
           rows[static_cast<size_t>(i)][static_cast<size_t>(j)] < x)
      ++i;
    if (i < static_cast<int>(rows.size()) && j < static_cast<int>(rows[static_cast<size_t>(i)].size())) {
      std::swap(x, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      continue;
    }
    // append at the bottom of column j
    if (i == static_cast<int>(rows.size()))
      rows.push_back({});
    rows[static_cast<size_t>(i)].push_back(x);
    Cell cell{i + 1, j + 1};
    return {unchecked_tableau(std::move(rows)), cell};
  }
}

// S(w): iterated row insertion, left to right.
inline SSYT insert_word(const Word& w) {
  SSYT t;
  for (int a : w) t = row_insert(t, a).first;
  return t;
}

// Column reading word: columns left to right, each bottom to top.
inline Word colread(const SSYT& t) {
  Word w;
  const auto& rows = t.rows();
  int width = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int j = 0; j < width; ++j) {
    int h = 0;
    while (h < static_cast<int>(rows.size()) && j < static_cast<int>(rows[static_cast<size_t>(h)].size())) ++h;
    for (int i = h - 1; i >= 0; --i) w.push_back(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return w;
}

// Ejects the last cell of row r (must be an outer corner) by reverse row
// insertion; returns the bumped-out letter.
inline int eject_corner(std::vector<std::vector<int>>& rows, int r) {
  int x = rows[static_cast<size_t>(r) - 1].back();
  rows[static_cast<size_t>(r) - 1].pop_back();
  if (rows[static_cast<size_t>(r) - 1].empty()) rows.pop_back();
  for (int i = r - 1; i >= 1; --i) {
    auto& row = rows[static_cast<size_t>(i) - 1];
    auto jt = std::lower_bound(row.begin(), row.end(), x);
    --jt;  // rightmost entry < x
    std::swap(x, *jt);
  }
  return x;
}

// Splits T as T1 <- a_c: a_c is a strictly decreasing word of length c1 whose
// insertion tableau is a single column, and T1 has conjugate shape (c2,...).
// Realized by ejecting the last cell of each row, bottom row first.
inline std::pair<SSYT, Word> split_first_column(const SSYT& t) {
  if (t.empty()) fail(errc::empty_tableau, "split_first_column");
  auto rows = t.rows();
  int m = static_cast<int>(rows.size());
  Word ejected;
  for (int i = m; i >= 1; --i) ejected.push_back(eject_corner(rows, i));
  std::reverse(ejected.begin(), ejected.end());
  return {unchecked_tableau(std::move(rows)), ejected};
}

// Ejects the bottom cell of column c (an outer corner) by reverse column
// insertion; returns the bumped-out letter.
inline int eject_column_corner(std::vector<std::vector<int>>& rows, int c) {
  int h = 0;
  while (h < static_cast<int>(rows.size()) && static_cast<int>(rows[static_cast<size_t>(h)].size()) >= c) ++h;
  int x = rows[static_cast<size_t>(h) - 1][static_cast<size_t>(c) - 1];
  rows[static_cast<size_t>(h) - 1].pop_back();
  if (rows[static_cast<size_t>(h) - 1].empty()) rows.pop_back();
  for (int j = c - 1; j >= 1; --j) {
    // bottommost entry <= x in column j (column entries strictly increase)
    int i = 0;
    while (i < static_cast<int>(rows.size()) && static_cast<int>(rows[static_cast<size_t>(i)].size()) >= j) ++i;
    while (i >= 1 && rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] > x) --i;
    std::swap(x, rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1]);
  }
  return x;
}

// Splits T as S(a_r ++ a1) where a_r is weakly increasing of length r1 with
// S(a_r) a single row, and the rest tableau (shape (r2,...,rm)) remains
// after ejecting the bottom cell of every column, rightmost first, by
// reverse column insertion.
inline std::pair<Word, SSYT> split_first_row(const SSYT& t) {
  if (t.empty()) fail(errc::empty_tableau, "split_first_row");
  auto rows = t.rows();
  int r1 = static_cast<int>(rows[0].size());
  Word row_word;
  for (int c = r1; c >= 1; --c) row_word.push_back(eject_column_corner(rows, c));
  return {row_word, unchecked_tableau(std::move(rows))};
}

// Every SSYT of the given shape with entries in 1..max_entry.
inline std::vector<SSYT> all_ssyt(const Shape& shape, int max_entry) {
  std::vector<SSYT> out;
  if (shape.parts.empty()) {
    out.push_back(SSYT{});
    return out;
  }
  std::vector<std::vector<int>> rows(static_cast<size_t>(shape.rows()));
  for (int i = 0; i < shape.rows(); ++i)
    rows[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.parts[static_cast<size_t>(i)]), 0);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == shape.rows()) {
      out.push_back(unchecked_tableau(rows));
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape.parts[static_cast<size_t>(r)]) nr = r + 1, nc = 0;
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]);
    if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      self(self, nr, nc);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// All words one elementary Knuth move away:
//   bac ~ bca (a < b <= c)   and   acb ~ cab (a <= b < c).
inline std::set<Word> classical_knuth_neighbors(const Word& w) {
  std::set<Word> out;
  for (size_t i = 0; i + 2 < w.size(); ++i) {
    int x = w[i], y = w[i + 1], z = w[i + 2];
    // bac -> bca and back
    if (y < x && x <= z) out.insert([&] { Word v = w; std::swap(v[i + 1], v[i + 2]); return v; }());
    if (z < x && x <= y) out.insert([&] { Word v = w; std::swap(v[i + 1], v[i + 2]); return v; }());
    // acb -> cab and back
    if (x <= z && z < y) out.insert([&] { Word v = w; std::swap(v[i], v[i + 1]); return v; }());
    if (y <= z && z < x) out.insert([&] { Word v = w; std::swap(v[i], v[i + 1]); return v; }());
  }
  return out;
}

}  // namespace pipedream
