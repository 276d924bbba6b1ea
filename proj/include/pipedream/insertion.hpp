#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pipedream/biword.hpp"
#include "pipedream/bpd.hpp"
#include "pipedream/error.hpp"
#include "pipedream/permutation.hpp"
#include "pipedream/tableau.hpp"

namespace pipedream {

enum class Mode { Left, Right };

struct InsertionOutcome {
  BPD result;
  CoverData cover;  // label = the biletter's k
};

namespace detail {

// Single-biletter insertion as defect propagation. The final elbow of the
// pipe exiting row a is removed (the new blank); the pipe then searches
// downward for a new eastward turn. Sweeping east it either bumps into a
// blank (left insertion: the Schensted bump, the blank re-materializes
// further east in its row), passes below blanks (right insertion), or meets
// another pipe's elbow, which is evicted when its pipe exits a row <= k and
// crossed when it exits below k. Displaced pipes climb back to the orphaned
// row. The label decides where the cascade stops, which makes the recording
// chain a mixed k-Bruhat cover.
class Machine {
 public:
  Machine(const BPD& d, int a, int k, Mode mode) : k_(k), mode_(mode) {
    n_ = std::max(d.n(), k + 1) + 1;
    BPD e = d.embedded(n_);
    g_.assign(static_cast<size_t>(n_), std::vector<Segments>(static_cast<size_t>(n_)));
    blank_.assign(static_cast<size_t>(n_), std::vector<char>(static_cast<size_t>(n_), 0));
    void_mark_.assign(static_cast<size_t>(n_), std::vector<char>(static_cast<size_t>(n_), 0));
    fresh_.assign(static_cast<size_t>(n_), std::vector<char>(static_cast<size_t>(n_), 0));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        at(i, j) = Segments::of(e.at(i, j));
        blank_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = e.at(i, j) == Tile::Blank;
      }
    if (a < 1 || a > k) fail(errc::bad_input, "biletter needs 1 <= a <= k");
    a_ = a;
    expected_blank_rows_.clear();
    for (auto [i, j] : e.blanks()) expected_blank_rows_.push_back(i);
    expected_blank_rows_.push_back(a);
    std::sort(expected_blank_rows_.begin(), expected_blank_rows_.end());
  }

  InsertionOutcome run(const Permutation& before) {
    // right insertion removes the rightmost r-elbow of row a (the final turn
    // of the pipe exiting that row); left insertion removes the leftmost one
    int x = a_, y = 0;
    if (mode_ == Mode::Right) {
      y = n_;
      while (y >= 1 && !at(x, y).se) {
        if (!at(x, y).we) fail(errc::bad_input, "no pipe exits the requested row");
        --y;
      }
    } else {
      y = 1;
      while (y <= n_ && !at(x, y).se) ++y;
    }
    if (y < 1 || y > n_) fail(errc::bad_input, "row has no r-elbow");
    at(x, y).se = false;  // the new blank, in row a
    blank_[static_cast<size_t>(x) - 1][static_cast<size_t>(y) - 1] = 1;
    set_orphan(x, y);
    Machine fallback = *this;
    auto out = search(before, x, y, 0);
    if (!out) {
      // retry allowing northward zigzag pulls into holes
      fallback.allow_vert_contract_ = true;
      out = fallback.search(before, x, y, 0);
    }
    if (!out) fail(errc::bad_input, "insertion found no consistent resolution");
    return *out;
  }

 private:
  struct Event {
    int col;
    enum { Elbow, Bump } kind;
  };

  // Deterministic advance (descend / slide / retract) until the next event,
  // then branch over the climb alternatives of that event. The first
  // alternative whose completion yields a diagram passing all the step
  // invariants wins; the preference order of the climb makes the result
  // deterministic.
  std::optional<InsertionOutcome> search(const Permutation& before, int dr, int dc, int depth) {
    if (depth > 4 * n_) return std::nullopt;
    // entry row of the dangling pipe into column dc
    int e = dr + 1;
    while (e <= n_ && at(e, dc).ns) ++e;
    bool has_j = e <= n_ && at(e, dc).nw;

    // descend: rows where the pipe can turn east and the sweep resolves,
    // preferring the highest; deeper rows are fallbacks when a resolution
    // dead-ends downstream
    for (int r = dr + 1; r < e; ++r) {
      if (at(r, dc).we) continue;  // crossing; cannot turn here
      auto ev = probe(r, dc);
      if (!ev) continue;
      if (ev->kind == Event::Elbow && !acceptable_meet(dr, dc, r, ev->col)) continue;
      Machine trial = *this;
      for (int rr = dr + 1; rr < r; ++rr) {
        trial.at(rr, dc).ns = false;  // vacate
        trial.mark_void(rr, dc);
      }
      trial.contract_fixpoint();
      trial.at(r, dc).ns = false;
      trial.at(r, dc).se = true;
      for (int c = dc + 1; c < ev->col; ++c) trial.at(r, c).we = true;
      if (auto out = trial.branch(before, r, *ev, depth)) return out;
    }

    if (!has_j) return std::nullopt;

    auto sev = probe(e, dc);
    if (sev && !(sev->kind == Event::Elbow && !acceptable_meet(dr, dc, e, sev->col))) {
      Machine trial = *this;
      for (int rr = dr + 1; rr < e; ++rr) {
        trial.at(rr, dc).ns = false;  // vacate
        trial.mark_void(rr, dc);
      }
      trial.contract_fixpoint();
      trial.at(e, dc).nw = false;
      trial.at(e, dc).we = true;  // the j-elbow slides east
      for (int c = dc + 1; c < sev->col; ++c) trial.at(e, c).we = true;
      if (auto out = trial.branch(before, e, *sev, depth)) return out;
    }

    // retract: unwind the j-elbow and the r-elbow feeding it
    for (int rr = dr + 1; rr < e; ++rr) {
      at(rr, dc).ns = false;  // vacate
      mark_void(rr, dc);
    }
    at(e, dc).nw = false;
    mark_void(e, dc);
    int c0 = dc - 1;
    while (c0 >= 1 && at(e, c0).we && !at(e, c0).se) {
      at(e, c0).we = false;
      mark_void(e, c0);
      --c0;
    }
    if (c0 < 1 || !at(e, c0).se) return std::nullopt;
    at(e, c0).se = false;
    mark_void(e, c0);
    contract_fixpoint();
    return search(before, e, c0, depth + 1);
  }

  std::optional<InsertionOutcome> branch(const Permutation& before, int r, Event ev, int depth) {
    for (int idx = 0;; ++idx) {
      Machine trial = *this;
      trial.climb_skip_ = idx;
      int res = trial.handle(r, ev);
      if (res == 0) return std::nullopt;  // climb alternatives exhausted
      if (res == 3) continue;             // this alternative dead-ends immediately
      if (res == 1) {
        try {
          return trial.finish(before);
        } catch (const error&) {
          continue;
        }
      }
      if (auto out = trial.search(before, trial.dangle_.first, trial.dangle_.second, depth + 1))
        return out;
    }
  }

 public:

 private:
  // The dangling run left behind by the latest removed elbow: the old pipe's
  // path from just past the elbow to the east edge. Claimers merge into it.
  struct TailCell {
    int r, c;
    char strand;  // 'w' horizontal, 'n' nw turn, 'v' vertical, 's' se turn
  };

  Segments& at(int i, int j) { return g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1]; }

  // Record the orphan tail of the elbow just removed at (r,c): the path the
  // pipe used to take from there to the east edge.
  void set_orphan(int r, int c) {
    tail_.clear();
    int i = r, j = c;
    bool east = true;
    while (true) {
      if (east) {
        ++j;
        if (j > n_) break;
        const Segments& s = at(i, j);
        if (s.we) tail_.push_back({i, j, 'w'});
        else if (s.nw) { tail_.push_back({i, j, 'n'}); east = false; }
        else fail(errc::dangling_strand, "broken orphan tail heading east");
      } else {
        --i;
        const Segments& s = at(i, j);
        if (s.ns) tail_.push_back({i, j, 'v'});
        else if (s.se) { tail_.push_back({i, j, 's'}); east = true; }
        else fail(errc::dangling_strand, "broken orphan tail heading north");
      }
    }
    tail_exit_row_ = i;
  }

  // Index into the tail if (r,c) lies on it, else -1.
  int tail_index(int r, int c) const {
    for (size_t i = 0; i < tail_.size(); ++i)
      if (tail_[i].r == r && tail_[i].c == c) return static_cast<int>(i);
    return -1;
  }

  void strip_tail_prefix(int upto) {
    for (int i = 0; i < upto; ++i) {
      Segments& s = at(tail_[static_cast<size_t>(i)].r, tail_[static_cast<size_t>(i)].c);
      switch (tail_[static_cast<size_t>(i)].strand) {
        case 'w': s.we = false; break;
        case 'n': s.nw = false; break;
        case 'v': s.ns = false; break;
        case 's': s.se = false; break;
      }
    }
  }

  // Collects the cells of the pipe through (r,c), walking both ways from the
  // given heading. Cells are flagged by the strand direction used there.
  struct PipePath {
    std::set<std::pair<int, int>> vert, horiz;
  };

  // Path of the dangling pipe: walk from the dangle site down to the south
  // edge (its upstream half is all that remains).
  PipePath dangler_path(int dr, int dc) const {
    PipePath p;
    int i = dr + 1, j = dc;
    bool down = true;  // walking against the flow
    while (i <= n_) {
      const Segments& s = g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
      if (down) {
        if (s.ns) { p.vert.insert({i, j}); ++i; continue; }
        if (s.nw) { p.horiz.insert({i, j}); --j; down = false; continue; }
        break;
      }
      if (s.we) { p.horiz.insert({i, j}); --j; continue; }
      if (s.se) { p.vert.insert({i, j}); ++i; down = true; continue; }
      break;
    }
    return p;
  }

  // Full path of the pipe whose elbow sits at (r,c): forward to the east
  // edge and backward to the south edge.
  PipePath elbow_pipe_path(int r, int c) const {
    PipePath p;
    p.vert.insert({r, c});
    int i = r, j = c;
    bool east = true;
    while (j < n_ || !east) {
      if (east) {
        ++j;
        const Segments& s = g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
        if (s.we) { p.horiz.insert({i, j}); continue; }
        if (s.nw) { p.horiz.insert({i, j}); east = false; continue; }
        break;
      }
      --i;
      const Segments& s = g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
      if (s.ns) { p.vert.insert({i, j}); continue; }
      if (s.se) { p.vert.insert({i, j}); east = true; continue; }
      break;
    }
    i = r + 1;
    j = c;
    bool down = true;
    while (i <= n_) {
      const Segments& s = g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
      if (down) {
        if (s.ns) { p.vert.insert({i, j}); ++i; continue; }
        if (s.nw) { p.horiz.insert({i, j}); --j; down = false; continue; }
        break;
      }
      if (s.we) { p.horiz.insert({i, j}); --j; continue; }
      if (s.se) { p.vert.insert({i, j}); ++i; down = true; continue; }
      break;
    }
    return p;
  }

  // Full path of the pipe running vertically through (r,c): down to the
  // south edge and up/east to the east edge.
  PipePath vertical_pipe_path(int r, int c) const {
    PipePath p;
    int i = r, j = c;
    // upstream (south)
    int ii = i + 1, jj = j;
    bool down = true;
    while (ii <= n_) {
      const Segments& s = g_[static_cast<size_t>(ii) - 1][static_cast<size_t>(jj) - 1];
      if (down) {
        if (s.ns) { p.vert.insert({ii, jj}); ++ii; continue; }
        if (s.nw) { p.horiz.insert({ii, jj}); --jj; down = false; continue; }
        break;
      }
      if (s.we) { p.horiz.insert({ii, jj}); --jj; continue; }
      if (s.se) { p.vert.insert({ii, jj}); ++ii; down = true; continue; }
      break;
    }
    // downstream (north then east)
    bool east = false;
    while (i >= 1 && (j < n_ || !east)) {
      if (!east) {
        const Segments& s = g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
        if (s.ns) { p.vert.insert({i, j}); --i; continue; }
        if (s.se) { p.vert.insert({i, j}); east = true; continue; }
        break;
      }
      ++j;
      const Segments& s = g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
      if (s.we) { p.horiz.insert({i, j}); continue; }
      if (s.nw) { p.horiz.insert({i, j}); east = false; --i; continue; }
      break;
    }
    return p;
  }

  static bool paths_cross(const PipePath& a, const PipePath& b) {
    for (const auto& cell : a.vert)
      if (b.horiz.count(cell)) return true;
    for (const auto& cell : a.horiz)
      if (b.vert.count(cell)) return true;
    return false;
  }

  // A terminal cross with a pipe the dangler already crosses would break
  // reducedness, and so would sweeping across the vertical strand of such a
  // pipe; those meets are skipped and the descent continues.
  bool acceptable_meet(int dr, int dc, int r, int c) {
    PipePath dp = dangler_path(dr, dc);
    for (int cc = dc + 1; cc < c; ++cc) {
      const Segments& s = g_[static_cast<size_t>(r) - 1][static_cast<size_t>(cc) - 1];
      if (!s.ns || s.we) continue;
      if (paths_cross(dp, vertical_pipe_path(r, cc))) return false;
    }
    int beta = exit_row(r, c);
    if (beta <= k_) return true;
    return !paths_cross(dp, elbow_pipe_path(r, c));
  }

  // Cells emptied by the machine (never the weight blanks of the diagram)
  // may pull an adjacent zigzag of a neighboring pipe one column west
  // instead of staying as holes; sliding cascades until no marked hole has
  // a zigzag on its east side.
  void mark_void(int rr, int cc) {
    const Segments& s = at(rr, cc);
    if (!s.ns && !s.we && !s.se && !s.nw)
      void_mark_[static_cast<size_t>(rr) - 1][static_cast<size_t>(cc) - 1] = 1;
  }

  // Pulls a zigzag of the neighboring pipe (r-elbow over a vertical run over
  // a j-elbow in column cc+1) one column west into open ground: the r-elbow
  // and verticals need empty cells, the j-elbow row needs a bare horizontal
  // strand of the same pipe.
  bool contract_at(int rr, int cc) {
    Segments& hole = at(rr, cc);
    if (hole.ns || hole.we || hole.se || hole.nw) return false;
    if (cc + 1 > n_) return false;
    if (!at(rr, cc + 1).se || is_fresh(rr, cc + 1)) return false;
    int h = rr + 1;
    // the vertical run shifts one column west, crossing bare horizontals
    while (h <= n_ && at(h, cc + 1).ns && !is_fresh(h, cc + 1)) {
      const Segments& t = at(h, cc);
      bool open = !t.ns && !t.se && !t.nw && !(t.we == false && is_blank(h, cc));
      if (!open) break;
      ++h;
    }
    if (h > n_ || !at(h, cc + 1).nw || is_fresh(h, cc + 1)) return false;
    Segments& s_cell = at(h, cc);
    if (!s_cell.we || s_cell.ns || s_cell.se || s_cell.nw) return false;
    // commit the westward slide
    hole.se = true;
    for (int i = rr + 1; i < h; ++i) {
      at(i, cc).ns = true;
      at(i, cc + 1).ns = false;
    }
    s_cell.we = false;
    s_cell.nw = true;
    at(h, cc + 1).nw = false;
    at(rr, cc + 1).se = false;
    at(rr, cc + 1).we = true;
    // cells the zigzag leaves behind stay open for climbers; they do not
    // attract further contraction
    void_mark_[static_cast<size_t>(rr) - 1][static_cast<size_t>(cc) - 1] = 0;
    return true;
  }

  // Mirror move: pulls a zigzag lying under the hole (r-elbow below, a
  // horizontal run east of it, the j-elbow and the pipe's return elbow above
  // it) one row north. The kink under the hole straightens.
  bool contract_vert_at(int rr, int cc) {
    Segments& hole = at(rr, cc);
    if (hole.ns || hole.we || hole.se || hole.nw) return false;
    if (rr + 1 > n_) return false;
    Segments& below = at(rr + 1, cc);
    if (!below.se || below.ns || below.we || below.nw || is_fresh(rr + 1, cc)) return false;
    int w = cc + 1;
    while (w <= n_ && at(rr + 1, w).we && !is_fresh(rr + 1, w)) {
      const Segments& t = at(rr, w);
      bool open = !t.we && !t.se && !t.nw && !(t.ns == false && is_blank(rr, w));
      if (!open) break;
      ++w;
    }
    if (w > n_ || !at(rr + 1, w).nw || is_fresh(rr + 1, w)) return false;
    Segments& upper = at(rr, w);
    if (!upper.se || upper.ns || upper.we || upper.nw || is_fresh(rr, w)) return false;
    // commit the northward pull
    hole.se = true;
    below.se = false;
    below.ns = true;
    for (int j = cc + 1; j < w; ++j) {
      at(rr, j).we = true;
      at(rr + 1, j).we = false;
    }
    at(rr + 1, w).nw = false;
    upper.se = false;
    upper.we = true;
    void_mark_[static_cast<size_t>(rr) - 1][static_cast<size_t>(cc) - 1] = 0;
    return true;
  }

  void contract_fixpoint() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int rr = 1; rr <= n_; ++rr)
        for (int cc = 1; cc <= n_; ++cc)
          if (void_mark_[static_cast<size_t>(rr) - 1][static_cast<size_t>(cc) - 1] &&
              (contract_at(rr, cc) || (allow_vert_contract_ && contract_vert_at(rr, cc))))
            changed = true;
    }
  }

  // Scan east along row r from column dc+1: only blanks, verticals and
  // r-elbows can appear. Returns the stopping event, or nothing if the row
  // is unusable.
  std::optional<Event> probe(int r, int dc) {
    for (int c = dc + 1; c <= n_; ++c) {
      Segments s = at(r, c);
      if (s.ns && !s.we && !s.se && !s.nw) continue;
      if (s.se) return Event{c, Event::Elbow};
      if (!s.ns && !s.we && !s.nw) {
        if (mode_ == Mode::Left) return Event{c, Event::Bump};
        return std::nullopt;  // right insertion dives below blanks
      }
      return std::nullopt;
    }
    return std::nullopt;
  }

  // Exit row of the pipe owning the strand leaving (r,c) eastward.
  int exit_row(int r, int c) const {
    int i = r, j = c;
    bool east = true;
    while (j < n_ || !east) {
      if (east) {
        ++j;
        const Segments& s = g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
        if (s.we) continue;
        if (s.nw) { east = false; continue; }
        fail(errc::dangling_strand, "broken pipe while tracing east");
      } else {
        --i;
        const Segments& s = g_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
        if (s.ns) continue;
        if (s.se) { east = true; continue; }
        fail(errc::dangling_strand, "broken pipe while tracing north");
      }
    }
    return i;
  }

  // Runs the event resolution with the current climb alternative; returns
  // 0 when the climb alternatives are exhausted, 1 on a terminal cross,
  // 2 when a new dangle remains, 3 when this alternative dead-ends.
  int handle(int r, const Event& ev) {
    int c = ev.col;
    if (ev.kind == Event::Bump) {
      // consume the blank, climb into the orphan tail, re-materialize the
      // blank at the next elbow east in this row
      at(r, c).nw = true;
      mark_fresh(r, c);
      if (!climb(r - 1, c)) return 0;
      int c2 = c + 1;
      while (c2 <= n_ && !at(r, c2).se) {
        Segments s = at(r, c2);
        if (s.we || s.nw) return 3;
        ++c2;
      }
      if (c2 > n_) return 3;
      at(r, c2).se = false;
      blank_[static_cast<size_t>(r) - 1][static_cast<size_t>(c2) - 1] = 1;
      set_orphan(r, c2);
      dangle_ = {r, c2};
      return 2;
    }
    int beta = exit_row(r, c);
    if (beta > k_) {
      // terminal: cross, adopt the evicted run, the evictee climbs away
      at(r, c).se = false;
      at(r, c).ns = true;
      at(r, c).we = true;
      mark_fresh(r, c);
      final_alpha_ = tail_exit_row_;
      final_beta_ = beta;
      if (!climb(r - 1, c)) return 0;
      return 1;
    }
    // intermediate eviction: turn north and climb; the evictee dangles
    at(r, c).se = false;
    at(r, c).nw = true;
    mark_fresh(r, c);
    if (!climb(r - 1, c)) return 0;
    set_orphan(r, c);
    dangle_ = {r, c};
    return 2;
  }

  // Climb north from a resolution site, crossing horizontal strands and
  // absorbing blanks, snaking east through empty cells when blocked, until
  // merging into the orphan tail: a straight tail cell becomes the new
  // elbow, a tail j-elbow is passed through and the rest of the tail is
  // adopted. Tail cells are never crossed without merging.
  bool climb(int r, int c) {
    if (r < 1) return false;
    Segments& s = at(r, c);
    int ti = tail_index(r, c);
    if (ti >= 0) {
      char kind = tail_[static_cast<size_t>(ti)].strand;
      if (kind == 'w' && s.we && !s.ns && !s.se && !s.nw) {
        if (climb_skip_ > 0) {
          --climb_skip_;
          return false;
        }
        strip_tail_prefix(ti);
        s.we = false;
        s.se = true;
        mark_fresh(r, c);
        return true;
      }
      if (kind == 'n' && s.nw && !s.ns && !s.we && !s.se) {
        if (climb_skip_ > 0) {
          --climb_skip_;
          return false;
        }
        strip_tail_prefix(ti);
        s.nw = false;
        s.ns = true;
        mark_fresh(r, c);
        return true;
      }
      return false;
    }
    if (s.we && !s.ns && !s.se && !s.nw) {
      s.ns = true;
      if (climb(r - 1, c)) {
        mark_fresh(r, c);
        return true;
      }
      s.ns = false;
      return false;
    }
    if (!s.we && !s.ns && !s.se && !s.nw) {
      // empty ground: blanks of the input diagram may only be absorbed
      // (straight through), while cells emptied during this run are free to
      // turn; the eastward route is preferred
      if (!is_blank(r, c)) {
        s.se = true;
        if (climb_east(r, c + 1)) {
          mark_fresh(r, c);
          return true;
        }
        s.se = false;
      }
      s.ns = true;
      if (climb(r - 1, c)) {
        mark_fresh(r, c);
        return true;
      }
      s.ns = false;
      return false;
    }
    return false;
  }

  bool climb_east(int r, int c) {
    if (c > n_) return false;
    if (tail_index(r, c) >= 0) return false;  // the tail is only joined from the south
    Segments& s = at(r, c);
    if (s.ns && !s.we && !s.se && !s.nw) {
      s.we = true;
      if (climb_east(r, c + 1)) {
        mark_fresh(r, c);
        return true;
      }
      s.we = false;
      return false;
    }
    if (!s.ns && !s.we && !s.se && !s.nw) {
      s.nw = true;
      if (climb(r - 1, c)) {
        mark_fresh(r, c);
        return true;
      }
      s.nw = false;
      if (!is_blank(r, c)) {
        s.we = true;
        if (climb_east(r, c + 1)) {
          mark_fresh(r, c);
          return true;
        }
        s.we = false;
      }
      return false;
    }
    return false;
  }

  bool is_blank(int r, int c) const {
    return blank_[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] != 0;
  }

  void mark_fresh(int r, int c) { fresh_[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = 1; }
  bool is_fresh(int r, int c) const { return fresh_[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] != 0; }

  InsertionOutcome finish(const Permutation& before) {
    std::vector<std::vector<Tile>> grid(static_cast<size_t>(n_), std::vector<Tile>(static_cast<size_t>(n_)));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        auto t = at(i, j).tile();
        if (!t) fail(errc::dangling_strand, "insertion left an inconsistent tile");
        grid[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = *t;
      }
    BPD out(std::move(grid));
    Permutation after = validate(out);
    std::vector<int> rows;
    for (auto [i, j] : out.blanks()) rows.push_back(i);
    std::sort(rows.begin(), rows.end());
    if (rows != expected_blank_rows_) fail(errc::bad_input, "insertion changed the weight multiset");
    if (final_alpha_ > k_ || final_beta_ <= k_)
      fail(errc::bad_input, "insertion cover is not a mixed k-cover");
    if (!(before.with_swapped_positions(final_alpha_, final_beta_) == after))
      fail(errc::bad_input, "insertion did not realize the recorded cover");
    CoverData cd = cover_up(before, final_alpha_, final_beta_, k_);
    return {out.normalized(), cd};
  }

  int n_ = 0, k_ = 0, a_ = 0;
  Mode mode_;
  std::vector<std::vector<Segments>> g_;
  std::vector<std::vector<char>> blank_;
  std::vector<std::vector<char>> void_mark_;
  std::vector<std::vector<char>> fresh_;
  std::vector<TailCell> tail_;
  int tail_exit_row_ = 0;
  int final_alpha_ = 0, final_beta_ = 0;
  int climb_skip_ = 0;
  bool allow_vert_contract_ = false;
  std::vector<int> expected_blank_rows_;
  std::pair<int, int> dangle_{0, 0};
};

}  // namespace detail

// D <- <a/k> (right insertion of one biletter).
inline InsertionOutcome right_insert(const BPD& d, const Biletter& b) {
  Permutation before = validate(d);
  detail::Machine m(d, b.a, b.k, Mode::Right);
  InsertionOutcome out = m.run(before);
  return out;
}

// <a/k> -> D (left insertion of one biletter).
inline InsertionOutcome left_insert(const Biletter& b, const BPD& d) {
  Permutation before = validate(d);
  detail::Machine m(d, b.a, b.k, Mode::Left);
  InsertionOutcome out = m.run(before);
  return out;
}

// phi_L with recording chain: read Q right to left, left-inserting.
inline std::pair<BPD, DecoratedChain> insert_left_with_chain(const PlacticBiword& q) {
  BPD d = BPD::identity();
  DecoratedChain ch;
  ch.start = Permutation::identity();
  for (auto it = q.biletters().rbegin(); it != q.biletters().rend(); ++it) {
    InsertionOutcome o = left_insert(*it, d);
    d = o.result;
    ch.steps.push_back(o.cover);
  }
  return {d, ch};
}

// phi_R with recording chain: read Q left to right, right-inserting.
inline std::pair<BPD, DecoratedChain> insert_right_with_chain(const PlacticBiword& q) {
  BPD d = BPD::identity();
  DecoratedChain ch;
  ch.start = Permutation::identity();
  for (const auto& b : q.biletters()) {
    InsertionOutcome o = right_insert(d, b);
    d = o.result;
    ch.steps.push_back(o.cover);
  }
  return {d, ch};
}

inline BPD phi_left(const PlacticBiword& q) { return insert_left_with_chain(q).first; }
inline BPD phi_right(const PlacticBiword& q) { return insert_right_with_chain(q).first; }

// phi(Q): well-defined on plactic biwords; computed by left insertion.
inline BPD phi(const PlacticBiword& q) { return phi_left(q); }

inline DecoratedChain ch_left(const PlacticBiword& q) { return insert_left_with_chain(q).second; }
inline DecoratedChain ch_right(const PlacticBiword& q) { return insert_right_with_chain(q).second; }

namespace detail {

// Recovers the biword whose insertion (in the given mode/order) produces D
// with the given recording chain, by depth-first search over top-row letters
// with the chain's covers as a step filter. The RSK correspondence makes the
// answer unique; search failure means the chain is invalid for D.
inline std::optional<std::vector<int>> unbuild(const BPD& target, const DecoratedChain& ch, Mode mode,
                                               size_t step, const BPD& cur, const Permutation& p) {
  if (step == ch.steps.size()) {
    if (cur == target) return std::vector<int>{};
    return std::nullopt;
  }
  const CoverData& cd = ch.steps[step];
  for (int a = 1; a <= cd.label; ++a) {
    InsertionOutcome o = mode == Mode::Left ? left_insert(Biletter(a, cd.label), cur)
                                            : right_insert(cur, Biletter(a, cd.label));
    if (o.cover.alpha != cd.alpha || o.cover.beta != cd.beta) continue;
    auto rest = unbuild(target, ch, mode, step + 1, o.result, p);
    if (rest) {
      rest->push_back(a);
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// L^{-1}(D, ch): the unique plactic biword with left recording chain ch and
// insertion BPD D.
inline PlacticBiword inverse_left(const BPD& d, const DecoratedChain& ch) {
  Permutation p = validate(d);
  if (!(ch.end() == p)) fail(errc::chain_mismatch, "chain does not end at perm(D)");
  auto letters = detail::unbuild(d.normalized(), ch, Mode::Left, 0, BPD::identity(), p);
  if (!letters) fail(errc::no_preimage, "no biword inserts to D along the chain");
  // left insertion processes the biword right to left; letters came back in
  // insertion order already reversed by the unwinding
  std::vector<Biletter> bs;
  const auto& labels = ch.steps;
  for (size_t i = 0; i < letters->size(); ++i)
    bs.emplace_back((*letters)[i], labels[letters->size() - 1 - i].label);
  return PlacticBiword(std::move(bs));
}

// R^{-1}(D, ch).
inline PlacticBiword inverse_right(const BPD& d, const DecoratedChain& ch) {
  Permutation p = validate(d);
  if (!(ch.end() == p)) fail(errc::chain_mismatch, "chain does not end at perm(D)");
  auto letters = detail::unbuild(d.normalized(), ch, Mode::Right, 0, BPD::identity(), p);
  if (!letters) fail(errc::no_preimage, "no biword inserts to D along the chain");
  std::vector<Biletter> bs;
  const auto& labels = ch.steps;
  std::reverse(letters->begin(), letters->end());
  for (size_t i = 0; i < letters->size(); ++i) bs.emplace_back((*letters)[i], labels[i].label);
  return PlacticBiword(std::move(bs));
}

// The forced right-insertion chain of the maxword: peel covers t_{alpha,k+1}
// from the top, k the first descent, alpha minimal with pi(alpha) > pi(k+1).
inline DecoratedChain maxword_chain(const Permutation& p) {
  std::vector<CoverData> rev;
  Permutation cur = p;
  while (!cur.is_identity()) {
    int k = d1(cur);
    std::vector<int> mc = maxcode(cur);
    int m = k + 1 <= static_cast<int>(mc.size()) ? mc[static_cast<size_t>(k)] : 0;
    if (m <= 0) fail(errc::bad_input, "maxcode vanished at the first descent");
    for (int t = 0; t < m; ++t) {
      int alpha = 1;
      while (cur(alpha) < cur(k + 1)) ++alpha;
      if (alpha > k) fail(errc::bad_input, "maxword peel found no alpha");
      Permutation prev = cur.with_swapped_positions(alpha, k + 1);
      rev.push_back(cover_up(prev, alpha, k + 1, k));
      cur = prev;
    }
  }
  DecoratedChain ch;
  ch.start = Permutation::identity();
  ch.steps.assign(rev.rbegin(), rev.rend());
  return ch;
}

// The delta chain from the identity to p: the minword's left recording chain.
inline DecoratedChain minword_chain(const Permutation& p) {
  DecoratedChain ch;
  ch.start = Permutation::identity();
  Permutation cur = ch.start;
  while (!(cur == p)) {
    Permutation next = delta(cur, p);
    // recover the transposition
    int alpha = 1;
    while (cur(alpha) == next(alpha)) ++alpha;
    int beta = alpha + 1;
    while (cur(beta) == next(beta)) ++beta;
    ch.steps.push_back(cover_up(cur, alpha, beta, alpha));
    cur = next;
  }
  return ch;
}

// The unique biword for D whose label i occurs maxcode(pi)(i+1) times.
inline PlacticBiword maxword(const BPD& d) { return inverse_right(d, maxword_chain(validate(d))); }

// The unique biword for D whose label i occurs code(pi)(i) times.
inline PlacticBiword minword(const BPD& d) { return inverse_left(d, minword_chain(validate(d))); }

// ssyt_to_bpd(T, k) := phi(<colread(T)/k>).
inline BPD ssyt_to_bpd(const SSYT& t, int k) {
  for (const auto& row : t.rows())
    for (int v : row)
      if (v > k) fail(errc::entry_exceeds_k, "tableau entry exceeds k");
  Word w = colread(t);
  std::vector<Biletter> bs;
  for (int a : w) bs.emplace_back(a, k);
  return phi(PlacticBiword(std::move(bs)));
}

// Inverse of ssyt_to_bpd, found by search over SSYT of the permutation's
// shape (the correspondence is a bijection).
inline SSYT grassmannian_to_ssyt(const BPD& d, int k) {
  Permutation p = validate(d);
  if (!is_grassmannian(p)) fail(errc::not_grassmannian, p.str());
  if (!p.is_identity() && d1(p) != k) fail(errc::not_grassmannian, "descent is not at k");
  BPD dn = d.normalized();
  for (const SSYT& t : all_ssyt(Shape(shape_of(p)), k))
    if (ssyt_to_bpd(t, k) == dn) return t;
  fail(errc::shape_mismatch, "no tableau inserts to this bpd");
}

}  // namespace pipedream
