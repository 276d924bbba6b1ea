#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pipedream/error.hpp"

namespace pipedream {

// A permutation of {1,2,3,...} with finite support, stored as a one-line
// window [p(1),...,p(n)] normalized by dropping trailing fixed points.
// p(i) = i for every i beyond the window.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> window) : win_(std::move(window)) {
    check_window(win_);
    normalize();
  }

  static Permutation identity() { return Permutation{}; }

  // Value at position i (1-based), valid for any i >= 1.
  int operator()(int i) const {
    if (i < 1) fail(errc::bad_input, "position must be positive");
    return i <= size() ? win_[static_cast<size_t>(i) - 1] : i;
  }

  int size() const { return static_cast<int>(win_.size()); }
  const std::vector<int>& window() const { return win_; }
  bool is_identity() const { return win_.empty(); }

  // One-line window of length at least m (padded with fixed points).
  std::vector<int> window_padded(int m) const {
    std::vector<int> w = win_;
    for (int i = size() + 1; i <= m; ++i) w.push_back(i);
    return w;
  }

  Permutation inverse() const {
    std::vector<int> inv(win_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>(win_[i - 1]) - 1] = i;
    return Permutation(std::move(inv));
  }

  // Right multiplication by the transposition t_{a,b}: swaps positions a, b.
  Permutation with_swapped_positions(int a, int b) const {
    if (a == b || a < 1 || b < 1) fail(errc::bad_input, "bad transposition");
    std::vector<int> w = window_padded(std::max({size(), a, b}));
    std::swap(w[static_cast<size_t>(a) - 1], w[static_cast<size_t>(b) - 1]);
    return Permutation(std::move(w));
  }

  long length() const {
    long inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (win_[static_cast<size_t>(i)] > win_[static_cast<size_t>(j)]) ++inv;
    return inv;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.win_ == b.win_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.win_ <=> b.win_; }

  // Digit string for n <= 9, comma-separated otherwise.
  std::string str() const {
    if (win_.empty()) return "1";  // identity shown as its 1-window
    std::ostringstream os;
    if (size() <= 9) {
      for (int v : win_) os << v;
    } else {
      for (int i = 0; i < size(); ++i) os << (i ? "," : "") << win_[static_cast<size_t>(i)];
    }
    return os.str();
  }

  static Permutation parse(const std::string& s) {
    std::vector<int> w;
    if (s.find(',') != std::string::npos) {
      std::istringstream is(s);
      std::string tok;
      while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
    } else {
      for (char c : s) {
        if (c < '1' || c > '9') fail(errc::bad_input, "bad one-line notation: " + s);
        w.push_back(c - '0');
      }
    }
    return Permutation(std::move(w));
  }

 private:
  static void check_window(const std::vector<int>& w) {
    std::vector<char> seen(w.size(), 0);
    for (int v : w) {
      if (v < 1 || v > static_cast<int>(w.size()) || seen[static_cast<size_t>(v) - 1])
        fail(errc::bad_input, "window is not a permutation");
      seen[static_cast<size_t>(v) - 1] = 1;
    }
  }

  void normalize() {
    while (!win_.empty() && win_.back() == static_cast<int>(win_.size())) win_.pop_back();
  }

  std::vector<int> win_;
};

// code(p)(i) = #{j>i : p(j)<p(i)}; trailing zeros trimmed.
inline std::vector<int> code(const Permutation& p) {
  std::vector<int> c(static_cast<size_t>(p.size()), 0);
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(j) < p(i)) ++c[static_cast<size_t>(i) - 1];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// maxcode(p)(i) = #{j<i : p(j)>p(i)}; trailing zeros trimmed.
inline std::vector<int> maxcode(const Permutation& p) {
  std::vector<int> c(static_cast<size_t>(p.size()), 0);
  for (int i = 1; i <= p.size(); ++i)
    for (int j = 1; j < i; ++j)
      if (p(j) > p(i)) ++c[static_cast<size_t>(i) - 1];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// Inverse of the Lehmer code. The window grows as needed, so every finitely
// supported nonnegative sequence is realizable.
inline Permutation perm_from_code(const std::vector<int>& c) {
  int n = static_cast<int>(c.size());
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[static_cast<size_t>(i)] < 0) fail(errc::code_not_realizable, "negative code entry");
    n = std::max(n, i + 1 + c[static_cast<size_t>(i)]);
  }
  std::vector<int> avail(static_cast<size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int ci = i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : 0;
    w.push_back(avail[static_cast<size_t>(ci)]);
    avail.erase(avail.begin() + ci);
  }
  return Permutation(std::move(w));
}

inline std::vector<int> descents(const Permutation& p) {
  std::vector<int> d;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) > p(i + 1)) d.push_back(i);
  return d;
}

// First descent.
inline int d1(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) > p(i + 1)) return i;
  fail(errc::identity_has_no_descent, "d1 of identity");
}

// Last descent.
inline int d2(const Permutation& p) {
  for (int i = p.size(); i >= 1; --i)
    if (p(i) > p(i + 1)) return i;
  fail(errc::identity_has_no_descent, "d2 of identity");
}

// Data of a Bruhat cover p <: p t_{alpha,beta}, with the counts from the
// code/maxcode transition lemma and the mixed label it is used under.
struct CoverData {
  int alpha = 0;
  int beta = 0;
  int label = 0;  // k with alpha <= k < beta
  int m_alpha = 0;
  int m_beta = 0;
  friend bool operator==(const CoverData&, const CoverData&) = default;
};

inline bool is_cover(const Permutation& p, int alpha, int beta) {
  if (alpha >= beta || p(alpha) >= p(beta)) return false;
  for (int i = alpha + 1; i < beta; ++i)
    if (p(alpha) < p(i) && p(i) < p(beta)) return false;
  return true;
}

inline CoverData cover_up(const Permutation& p, int alpha, int beta, int label = 0) {
  if (!is_cover(p, alpha, beta))
    fail(errc::not_a_cover, p.str() + " t_{" + std::to_string(alpha) + "," + std::to_string(beta) + "}");
  CoverData cd;
  cd.alpha = alpha;
  cd.beta = beta;
  cd.label = label ? label : alpha;
  int n = std::max(p.size(), beta);
  for (int i = beta + 1; i <= n; ++i)
    if (p(alpha) < p(i) && p(i) < p(beta)) ++cd.m_alpha;
  for (int i = 1; i < alpha; ++i)
    if (p(alpha) < p(i) && p(i) < p(beta)) ++cd.m_beta;
  return cd;
}

// All covers p <:_k p t_{alpha,beta} with alpha <= k < beta. The search window
// extends one past max(n, k+1); no cover can reach further.
inline std::vector<CoverData> k_bruhat_covers(const Permutation& p, int k) {
  if (k < 1) fail(errc::bad_input, "k must be positive");
  int n = std::max(p.size(), k + 1) + 1;
  std::vector<CoverData> out;
  for (int alpha = 1; alpha <= k; ++alpha)
    for (int beta = k + 1; beta <= n; ++beta)
      if (is_cover(p, alpha, beta)) out.push_back(cover_up(p, alpha, beta, k));
  return out;
}

// h(p): keep code up to the first descent, zero after; always Grassmannian.
inline Permutation h(const Permutation& p) {
  int k = d1(p);
  std::vector<int> c = code(p);
  c.resize(static_cast<size_t>(k));
  return perm_from_code(c);
}

// One delta step toward `target`: rho t_{alpha,beta} where alpha is the unique
// position with code(rho) matching code(target) before it, smaller at it, and
// zero after it; beta is the smallest position past alpha with
// rho(beta) > rho(alpha). The printed minword chain forces the inequality to
// be read on rho.
inline Permutation delta(const Permutation& rho, const Permutation& target) {
  std::vector<int> cr = code(rho);
  std::vector<int> ct = code(target);
  auto at = [](const std::vector<int>& v, int i) {
    return i <= static_cast<int>(v.size()) ? v[static_cast<size_t>(i) - 1] : 0;
  };
  int alpha = 0;
  int m = static_cast<int>(std::max(cr.size(), ct.size()));
  for (int i = 1; i <= m; ++i) {
    if (at(cr, i) == at(ct, i)) continue;
    if (at(cr, i) < at(ct, i)) alpha = i;
    break;
  }
  if (alpha == 0) fail(errc::delta_undefined, "no position with smaller code");
  for (int i = alpha + 1; i <= static_cast<int>(cr.size()); ++i)
    if (at(cr, i) != 0) fail(errc::delta_undefined, "code(rho) not supported up to alpha");
  int beta = alpha + 1;
  while (rho(beta) < rho(alpha)) ++beta;
  return rho.with_swapped_positions(alpha, beta);
}

inline bool is_grassmannian(const Permutation& p) { return descents(p).size() <= 1; }

// Partition shape of a Grassmannian permutation: code entries up to the
// descent, reversed.
inline std::vector<int> shape_of(const Permutation& p) {
  if (!is_grassmannian(p)) fail(errc::not_grassmannian, p.str());
  if (p.is_identity()) return {};
  int k = d1(p);
  std::vector<int> c = code(p);
  c.resize(static_cast<size_t>(k));
  std::reverse(c.begin(), c.end());
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline Permutation grassmannian_from_shape(const std::vector<int>& lambda, int k) {
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) fail(errc::bad_input, "not a partition");
  if (static_cast<int>(lambda.size()) > k) fail(errc::bad_input, "shape has more than k rows");
  std::vector<int> c(static_cast<size_t>(k), 0);
  for (size_t i = 0; i < lambda.size(); ++i) c[static_cast<size_t>(k) - 1 - i] = lambda[i];
  return perm_from_code(c);
}

// Bruhat order via the rank-matrix criterion.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  int n = std::max(u.size(), w.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int ru = 0, rw = 0;
      for (int a = 1; a <= i; ++a) {
        if (u(a) <= j) ++ru;
        if (w(a) <= j) ++rw;
      }
      if (ru < rw) return false;
    }
  }
  return true;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace pipedream

template <>
struct std::hash<pipedream::Permutation> {
  size_t operator()(const pipedream::Permutation& p) const {
    size_t h = 0xcbf29ce484222325ull;
    for (int v : p.window()) h = (h ^ static_cast<size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};
