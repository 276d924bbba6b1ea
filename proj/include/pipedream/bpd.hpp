#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pipedream/error.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/tableau.hpp"

namespace pipedream {

enum class Tile : char {
  Blank = '.',
  Cross = '+',
  RElbow = 'r',      // joins south and east
  JElbow = 'j',      // joins north and west
  Horizontal = '-',  // joins west and east
  Vertical = '|',    // joins north and south
};

// Segment decomposition of a tile: NS and WE through-strands, SE and NW turns.
struct Segments {
  bool ns = false, we = false, se = false, nw = false;

  static Segments of(Tile t) {
    switch (t) {
      case Tile::Blank: return {};
      case Tile::Cross: return {true, true, false, false};
      case Tile::RElbow: return {false, false, true, false};
      case Tile::JElbow: return {false, false, false, true};
      case Tile::Horizontal: return {false, true, false, false};
      case Tile::Vertical: return {true, false, false, false};
    }
    return {};
  }

  std::optional<Tile> tile() const {
    if (se && (ns || we || nw)) return std::nullopt;
    if (nw && (ns || we)) return std::nullopt;
    if (se) return Tile::RElbow;
    if (nw) return Tile::JElbow;
    if (ns && we) return Tile::Cross;
    if (ns) return Tile::Vertical;
    if (we) return Tile::Horizontal;
    return Tile::Blank;
  }
};

inline bool edge_n(Tile t) { return t == Tile::Cross || t == Tile::Vertical || t == Tile::JElbow; }
inline bool edge_s(Tile t) { return t == Tile::Cross || t == Tile::Vertical || t == Tile::RElbow; }
inline bool edge_e(Tile t) { return t == Tile::Cross || t == Tile::Horizontal || t == Tile::RElbow; }
inline bool edge_w(Tile t) { return t == Tile::Cross || t == Tile::Horizontal || t == Tile::JElbow; }

// Bumpless pipe dream on an n x n grid. Pipes enter the south edge (one per
// column, labeled by the column) and exit the east edge (one per row);
// perm(i) is the label of the pipe exiting row i. Trailing rows/columns in
// identity pattern are trimmed so equal diagrams compare equal.
class BPD {
 public:
  BPD() = default;
  explicit BPD(std::vector<std::vector<Tile>> grid, bool normalize_window = true)
      : grid_(std::move(grid)) {
    for (const auto& row : grid_)
      if (row.size() != grid_.size()) fail(errc::bad_input, "grid is not square");
    if (normalize_window) normalize();
  }

  static BPD identity(int n = 0) { return BPD(identity_grid(n), true); }

  int n() const { return static_cast<int>(grid_.size()); }

  Tile at(int i, int j) const {  // 1-based; identity pattern beyond the window
    if (i < 1 || j < 1) fail(errc::bad_input, "bad tile position");
    if (i <= n() && j <= n()) return grid_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
    if (i == j) return Tile::RElbow;
    return i < j ? Tile::Horizontal : Tile::Vertical;
  }

  void set(int i, int j, Tile t) { grid_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = t; }

  // Copy embedded in a window of size at least m.
  BPD embedded(int m) const {
    if (m <= n()) return *this;
    std::vector<std::vector<Tile>> g(static_cast<size_t>(m), std::vector<Tile>(static_cast<size_t>(m)));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = at(i, j);
    return BPD(std::move(g), false);
  }

  BPD normalized() const {
    BPD d = *this;
    d.normalize();
    return d;
  }

  friend bool operator==(const BPD& a, const BPD& b) { return a.grid_ == b.grid_; }
  friend bool operator<(const BPD& a, const BPD& b) { return a.grid_ < b.grid_; }

  std::string render() const {
    std::string s;
    for (int i = 1; i <= n(); ++i) {
      for (int j = 1; j <= n(); ++j) s += static_cast<char>(at(i, j));
      if (i < n()) s += '\n';
    }
    return s;
  }

  static BPD parse(const std::string& text) {
    std::vector<std::vector<Tile>> g;
    std::vector<Tile> row;
    auto flush = [&] {
      if (!row.empty()) g.push_back(std::move(row)), row.clear();
    };
    for (char c : text) {
      if (c == '\n') {
        flush();
        continue;
      }
      if (c == ' ') continue;
      switch (c) {
        case '.': case '+': case 'r': case 'j': case '-': case '|':
          row.push_back(static_cast<Tile>(c));
          break;
        default: fail(errc::bad_input, std::string("bad tile character '") + c + "'");
      }
    }
    flush();
    return BPD(std::move(g));
  }

  std::vector<std::pair<int, int>> blanks() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n(); ++i)
      for (int j = 1; j <= n(); ++j)
        if (at(i, j) == Tile::Blank) out.emplace_back(i, j);
    return out;
  }

 private:
  static std::vector<std::vector<Tile>> identity_grid(int n) {
    std::vector<std::vector<Tile>> g(static_cast<size_t>(n), std::vector<Tile>(static_cast<size_t>(n)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] =
            i == j ? Tile::RElbow : (i < j ? Tile::Horizontal : Tile::Vertical);
    return g;
  }

  bool last_is_identity() const {
    int m = n();
    if (m == 0) return false;
    if (at(m, m) != Tile::RElbow) return false;
    for (int j = 1; j < m; ++j)
      if (at(m, j) != Tile::Vertical) return false;
    for (int i = 1; i < m; ++i)
      if (at(i, m) != Tile::Horizontal) return false;
    return true;
  }

  void normalize() {
    while (last_is_identity()) {
      grid_.pop_back();
      for (auto& row : grid_) row.pop_back();
    }
  }

  std::vector<std::vector<Tile>> grid_;
};

// Traces all pipes; checks edge matching, boundary conditions and
// reducedness. Returns the permutation (pipe exiting row i, labeled by its
// south-entry column).
inline Permutation validate(const BPD& d) {
  int n = d.n();
  for (int j = 1; j <= n; ++j) {
    if (edge_n(d.at(1, j))) fail(errc::boundary_mismatch, "strand leaves the north edge");
    if (!edge_s(d.at(n, j))) fail(errc::boundary_mismatch, "no pipe enters south column " + std::to_string(j));
  }
  for (int i = 1; i <= n; ++i) {
    if (edge_w(d.at(i, 1))) fail(errc::boundary_mismatch, "strand leaves the west edge");
    if (!edge_e(d.at(i, n))) fail(errc::boundary_mismatch, "no pipe exits east row " + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < n && edge_s(d.at(i, j)) != edge_n(d.at(i + 1, j)))
        fail(errc::dangling_strand, "vertical mismatch below (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (j < n && edge_e(d.at(i, j)) != edge_w(d.at(i, j + 1)))
        fail(errc::dangling_strand, "horizontal mismatch right of (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

  // trace pipes; record per-cell strand owners for the reducedness check
  std::vector<std::vector<int>> vert_owner(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  std::vector<std::vector<int>> horiz_owner(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  std::vector<int> window(static_cast<size_t>(n), 0);
  enum class Dir { N, E };
  for (int c = 1; c <= n; ++c) {
    int i = n, j = c;
    Dir dir = Dir::N;  // entering (n,c) heading north
    for (;;) {
      if (i < 1 || j < 1 || i > n || j > n) fail(errc::dangling_strand, "pipe left the grid");
      Tile t = d.at(i, j);
      if (dir == Dir::N) {
        // entered from the south edge of (i,j)
        switch (t) {
          case Tile::Vertical: case Tile::Cross:
            vert_owner[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = c;
            --i;
            break;
          case Tile::RElbow:
            dir = Dir::E;
            ++j;
            break;
          default: fail(errc::dangling_strand, "pipe enters tile with no south edge");
        }
      } else {
        // entered from the west edge of (i,j)
        switch (t) {
          case Tile::Horizontal: case Tile::Cross:
            horiz_owner[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = c;
            ++j;
            break;
          case Tile::JElbow:
            dir = Dir::N;
            --i;
            break;
          default: fail(errc::dangling_strand, "pipe enters tile with no west edge");
        }
      }
      if (dir == Dir::N && i == 0) fail(errc::boundary_mismatch, "pipe exits the north edge");
      if (dir == Dir::E && j == n + 1) {
        if (window[static_cast<size_t>(i) - 1]) fail(errc::boundary_mismatch, "two pipes exit one row");
        window[static_cast<size_t>(i) - 1] = c;
        break;
      }
    }
  }

  std::set<std::pair<int, int>> crossings;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (d.at(i, j) == Tile::Cross) {
        int v = vert_owner[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
        int h = horiz_owner[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
        auto pair = std::minmax(v, h);
        if (!crossings.emplace(pair.first, pair.second).second)
          fail(errc::double_crossing, "pipes " + std::to_string(pair.first) + "," + std::to_string(pair.second));
      }
  return Permutation(window);
}

inline Permutation perm_of(const BPD& d) { return validate(d); }

// Rothe BPD: tile rule driven by the one-line window.
inline BPD rothe_bpd(const Permutation& p, int window = 0) {
  int n = std::max(p.size(), window);
  if (n == 0) n = 1;
  Permutation q = p.inverse();
  std::vector<std::vector<Tile>> g(static_cast<size_t>(n), std::vector<Tile>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Tile t;
      if (j == p(i)) t = Tile::RElbow;
      else if (j < p(i)) t = i < q(j) ? Tile::Blank : Tile::Vertical;
      else t = i < q(j) ? Tile::Horizontal : Tile::Cross;
      g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = t;
    }
  return BPD(std::move(g));
}

// Monomial weight: exponent of x_i = number of blanks in row i.
inline std::vector<int> weight(const BPD& d) {
  std::vector<int> w(static_cast<size_t>(d.n()), 0);
  for (auto [i, j] : d.blanks()) ++w[static_cast<size_t>(i) - 1];
  while (!w.empty() && w.back() == 0) w.pop_back();
  return w;
}

namespace detail {

struct SegGrid {
  std::vector<std::vector<Segments>> cells;
  explicit SegGrid(const BPD& d) {
    cells.assign(static_cast<size_t>(d.n()), std::vector<Segments>(static_cast<size_t>(d.n())));
    for (int i = 1; i <= d.n(); ++i)
      for (int j = 1; j <= d.n(); ++j) cells[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = Segments::of(d.at(i, j));
  }
  Segments& at(int i, int j) { return cells[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1]; }
  std::optional<BPD> to_bpd() const {
    std::vector<std::vector<Tile>> g(cells.size(), std::vector<Tile>(cells.size()));
    for (size_t i = 0; i < cells.size(); ++i)
      for (size_t j = 0; j < cells.size(); ++j) {
        auto t = cells[i][j].tile();
        if (!t) return std::nullopt;
        g[i][j] = *t;
      }
    return BPD(std::move(g));
  }
};

}  // namespace detail

// One droop: relocate the r-elbow at (i,j) to the blank at (i2,j2), i2>i,
// j2>j, rerouting the pipe through row i2 and column j2. Only the elbow cell
// may become blank and only the target blank may disappear; anything else is
// rejected.
inline std::optional<BPD> try_droop(const BPD& d, int i, int j, int i2, int j2) {
  if (d.at(i, j) != Tile::RElbow || d.at(i2, j2) != Tile::Blank) return std::nullopt;
  if (i2 <= i || j2 <= j) return std::nullopt;
  detail::SegGrid g(d.embedded(std::max(i2, j2)));
  auto res = [&]() -> bool {
    auto& start = g.at(i, j);
    start.se = false;
    // vacate the pipe's vertical strand strictly between i and i2
    for (int r = i + 1; r < i2; ++r) {
      auto& c = g.at(r, j);
      if (!c.ns) return false;
      c.ns = false;
      if (!c.we) return false;  // would create a blank
    }
    // the pipe now turns east at (i2,j): from a vertical strand or its own j-elbow
    {
      auto& c = g.at(i2, j);
      if (c.ns && !c.we) c.ns = false, c.se = true;
      else if (c.nw) c.nw = false, c.we = true;
      else return false;
    }
    for (int col = j + 1; col < j2; ++col) {
      auto& c = g.at(i2, col);
      if (c.we || c.se || c.nw) return false;
      if (!c.ns) return false;  // would absorb a blank
      c.we = true;
    }
    g.at(i2, j2).nw = true;
    for (int r = i + 1; r < i2; ++r) {
      auto& c = g.at(r, j2);
      if (c.ns || c.se || c.nw) return false;
      if (!c.we) return false;  // would absorb a blank
      c.ns = true;
    }
    // vacate the old horizontal run strictly between j and j2
    for (int col = j + 1; col < j2; ++col) {
      auto& c = g.at(i, col);
      if (!c.we) return false;
      c.we = false;
      if (!c.ns) return false;  // would create a blank
    }
    {
      auto& c = g.at(i, j2);
      if (c.we && !c.ns) c.we = false, c.se = true;
      else if (c.nw) c.nw = false, c.ns = true;
      else return false;
    }
    return true;
  }();
  if (!res) return std::nullopt;
  auto out = g.to_bpd();
  if (!out) return std::nullopt;
  try {
    if (!(validate(*out) == validate(d))) return std::nullopt;
  } catch (const error&) {
    return std::nullopt;
  }
  return out->normalized();
}

// All valid BPDs one droop away.
inline std::vector<BPD> droops(const BPD& d) {
  std::vector<BPD> out;
  int n = d.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (d.at(i, j) != Tile::RElbow) continue;
      for (int i2 = i + 1; i2 <= n; ++i2)
        for (int j2 = j + 1; j2 <= n; ++j2)
          if (d.at(i2, j2) == Tile::Blank)
            if (auto nd = try_droop(d, i, j, i2, j2)) out.push_back(std::move(*nd));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// BPD(p): droop closure from the Rothe BPD.
inline std::vector<BPD> all_bpds(const Permutation& p) {
  BPD start = rothe_bpd(p);
  std::set<std::string> seen{start.render()};
  std::vector<BPD> out{start}, frontier{start};
  while (!frontier.empty()) {
    std::vector<BPD> next;
    for (const BPD& d : frontier)
      for (BPD& nd : droops(d))
        if (seen.insert(nd.render()).second) {
          out.push_back(nd);
          next.push_back(std::move(nd));
        }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Raw count of edge-consistent n x n tilings, non-reduced included; equals
// the number of alternating sign matrices of order n.
inline long count_tilings(int n);

// Oracle: every valid reduced n x n BPD, found by backtracking over tiles
// with edge-consistency pruning, grouped by permutation.
inline std::map<Permutation, std::vector<BPD>> all_bpds_exhaustive(int n) {
  std::map<Permutation, std::vector<BPD>> out;
  std::vector<std::vector<Tile>> g(static_cast<size_t>(n), std::vector<Tile>(static_cast<size_t>(n), Tile::Blank));
  const Tile kinds[6] = {Tile::Blank, Tile::Cross, Tile::RElbow, Tile::JElbow, Tile::Horizontal, Tile::Vertical};
  auto fits = [&](int i, int j, Tile t) {
    bool need_n = i == 1 ? false : edge_s(g[static_cast<size_t>(i) - 2][static_cast<size_t>(j) - 1]);
    if (edge_n(t) != need_n) return false;
    bool need_w = j == 1 ? false : edge_e(g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 2]);
    if (edge_w(t) != need_w) return false;
    if (i == n && !edge_s(t)) return false;
    if (j == n && !edge_e(t)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i > n) {
      BPD d(g, true);
      try {
        Permutation p = validate(d);
        out[p].push_back(d.normalized());
      } catch (const error&) {
      }
      return;
    }
    int ni = j == n ? i + 1 : i, nj = j == n ? 1 : j + 1;
    for (Tile t : kinds) {
      if (!fits(i, j, t)) continue;
      g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = t;
      self(self, ni, nj);
    }
    g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = Tile::Blank;
  };
  rec(rec, 1, 1);
  for (auto& [p, v] : out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return out;
}

inline long count_tilings(int n) {
  long count = 0;
  std::vector<std::vector<Tile>> g(static_cast<size_t>(n), std::vector<Tile>(static_cast<size_t>(n), Tile::Blank));
  const Tile kinds[6] = {Tile::Blank, Tile::Cross, Tile::RElbow, Tile::JElbow, Tile::Horizontal, Tile::Vertical};
  auto fits = [&](int i, int j, Tile t) {
    bool need_n = i == 1 ? false : edge_s(g[static_cast<size_t>(i) - 2][static_cast<size_t>(j) - 1]);
    if (edge_n(t) != need_n) return false;
    bool need_w = j == 1 ? false : edge_e(g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 2]);
    if (edge_w(t) != need_w) return false;
    if (i == n && !edge_s(t)) return false;
    if (j == n && !edge_e(t)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i > n) {
      ++count;
      return;
    }
    int ni = j == n ? i + 1 : i, nj = j == n ? 1 : j + 1;
    for (Tile t : kinds) {
      if (!fits(i, j, t)) continue;
      g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = t;
      self(self, ni, nj);
    }
    g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = Tile::Blank;
  };
  rec(rec, 1, 1);
  return count;
}

}  // namespace pipedream
