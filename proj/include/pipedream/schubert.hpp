#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pipedream/bpd.hpp"
#include "pipedream/error.hpp"
#include "pipedream/insertion.hpp"
#include "pipedream/permutation.hpp"

namespace pipedream {

// Exact multivariate polynomial over the integers, exponent vectors with
// trailing zeros trimmed.
class IntPolynomial {
 public:
  using Monomial = std::vector<int>;

  IntPolynomial() = default;
  static IntPolynomial constant(long long c) {
    IntPolynomial f;
    if (c) f.terms_[{}] = c;
    return f;
  }
  static IntPolynomial monomial(Monomial m, long long c = 1) {
    IntPolynomial f;
    f.add_term(std::move(m), c);
    return f;
  }
  static IntPolynomial variable(int i) {
    Monomial m(static_cast<size_t>(i), 0);
    m[static_cast<size_t>(i) - 1] = 1;
    return monomial(std::move(m));
  }

  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, long long c) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c) terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_) {
        Monomial m(std::max(m1.size(), m2.size()), 0);
        for (size_t i = 0; i < m1.size(); ++i) m[i] += m1[i];
        for (size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
        out.add_term(std::move(m), c1 * c2);
      }
    return out;
  }

  IntPolynomial scaled(long long c) const {
    IntPolynomial out;
    if (c)
      for (const auto& [m, coef] : terms_) out.terms_[m] = coef * c;
    return out;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  bool homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int e : m) s += e;
      if (d < 0) d = s;
      if (s != d) return false;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!first) os << (c >= 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      long long mag = c < 0 ? -c : c;
      bool has_var = !m.empty();
      if (mag != 1 || !has_var) os << mag;
      for (size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        os << "x" << i + 1;
        if (m[i] > 1) os << "^" << m[i];
      }
    }
    return os.str();
  }

 private:
  std::map<Monomial, long long> terms_;
};

// Divided difference: monomial-exact, no division needed.
inline IntPolynomial divided_difference(const IntPolynomial& f, int i) {
  IntPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    IntPolynomial::Monomial rest(std::max(m.size(), static_cast<size_t>(i) + 1), 0);
    for (size_t t = 0; t < m.size(); ++t) rest[t] = m[t];
    int a = rest[static_cast<size_t>(i) - 1];
    int b = rest[static_cast<size_t>(i)];
    if (a == b) continue;
    rest[static_cast<size_t>(i) - 1] = 0;
    rest[static_cast<size_t>(i)] = 0;
    int lo = std::min(a, b), hi = std::max(a, b);
    long long sign = a > b ? c : -c;
    for (int e = lo; e < hi; ++e) {
      IntPolynomial::Monomial m2 = rest;
      m2[static_cast<size_t>(i) - 1] = e;
      m2[static_cast<size_t>(i)] = hi + lo - 1 - e;
      out.add_term(std::move(m2), sign);
    }
  }
  return out;
}

// Schubert polynomial as the weighted sum over BPD(p).
inline IntPolynomial schubert_bpd(const Permutation& p) {
  IntPolynomial f;
  for (const BPD& d : all_bpds(p)) f.add_term(weight(d), 1);
  return f;
}

// Independent oracle: divided differences applied to the staircase monomial
// along a reduced word from the longest element down to p.
inline IntPolynomial schubert_divdiff(const Permutation& p, int window = 0) {
  int n = std::max(p.size(), window);
  if (n < 1) n = 1;
  // staircase monomial for w0 in S_n
  IntPolynomial::Monomial delta_exp;
  for (int i = 0; i < n - 1; ++i) delta_exp.push_back(n - 1 - i);
  IntPolynomial f = IntPolynomial::monomial(delta_exp);
  // reduced word of w0 * p (as a function composition), found by stripping
  // descents from the right; apply the divided differences in word order
  std::vector<int> w0p(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) w0p[static_cast<size_t>(i) - 1] = n + 1 - p(i);
  Permutation u(w0p);
  std::vector<int> word;
  while (!u.is_identity()) {
    int d = d1(u);
    word.push_back(d);
    u = u.with_swapped_positions(d, d + 1);
  }
  std::reverse(word.begin(), word.end());
  for (int i : word) f = divided_difference(f, i);
  return f;
}

// Expansion in the Schubert basis by repeatedly stripping the
// lexicographically smallest monomial, which is x^code of its permutation.
inline std::map<Permutation, long long> expand_schubert(const IntPolynomial& f) {
  if (!f.homogeneous()) fail(errc::no_expansion, "polynomial is not homogeneous");
  std::map<Permutation, long long> out;
  IntPolynomial rest = f;
  for (int guard = 0; !rest.is_zero(); ++guard) {
    if (guard > 100000) fail(errc::no_expansion, "expansion did not terminate");
    const auto& [m, c] = *rest.terms().begin();  // lex-min under map order
    Permutation rho = perm_from_code(m);
    out[rho] += c;
    rest -= schubert_bpd(rho).scaled(c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Number of complete chains id -> p in mixed k-Bruhat order with the given
// label vector.
inline long count_chains(const Permutation& p, const std::vector<int>& labels) {
  if (static_cast<long>(labels.size()) != p.length()) return 0;
  long count = 0;
  auto rec = [&](auto&& self, const Permutation& cur, size_t step) -> void {
    if (step == labels.size()) {
      if (cur == p) ++count;
      return;
    }
    for (const CoverData& cd : k_bruhat_covers(cur, labels[step])) {
      Permutation next = cur.with_swapped_positions(cd.alpha, cd.beta);
      if (!bruhat_leq(next, p)) continue;
      self(self, next, step + 1);
    }
  };
  rec(rec, Permutation::identity(), 0);
  return count;
}

// The canonical admissible chains of Theorem 1.5: the left recording chain
// of a maxword of pi (weakly increasing labels, all at least d1) for the
// left factor, and the right recording chain of a minword of rho (weakly
// decreasing labels, all at most d2) for the right factor.
inline DecoratedChain admissible_left_chain(const Permutation& p) {
  PlacticBiword q = maxword(rothe_bpd(p));
  return ch_left(q);
}

inline DecoratedChain admissible_right_chain(const Permutation& r) {
  PlacticBiword q = minword(rothe_bpd(r));
  return ch_right(q);
}

// c_{p,r}^{s} by counting biword pairs, with every choice point exposed for
// the invariance checks.
inline long separated_descent_constant_for(const Permutation& p, const Permutation& r, const BPD& d_sigma,
                                           const DecoratedChain& ch_pi, const DecoratedChain& ch_rho) {
  BPD target = d_sigma.normalized();
  std::vector<PlacticBiword> lefts, rights;
  for (const BPD& dp : all_bpds(p)) lefts.push_back(inverse_left(dp, ch_pi));
  for (const BPD& dr : all_bpds(r)) rights.push_back(inverse_right(dr, ch_rho));
  long count = 0;
  for (const auto& ql : lefts)
    for (const auto& qr : rights) {
      PlacticBiword joint = ql.concat(qr);
      if (phi(joint) == target) ++count;
    }
  return count;
}

inline long separated_descent_constant(const Permutation& p, const Permutation& r, const Permutation& s) {
  if (!p.is_identity() && !r.is_identity() && d1(p) < d2(r))
    fail(errc::descent_condition_violated,
         "d1(" + p.str() + ") = " + std::to_string(d1(p)) + " < d2(" + r.str() + ") = " + std::to_string(d2(r)));
  if (s.length() != p.length() + r.length()) return 0;
  if (p.is_identity()) return s == r ? 1 : 0;
  if (r.is_identity()) return s == p ? 1 : 0;
  auto ds = all_bpds(s);
  if (ds.empty()) fail(errc::no_admissible_chain, "no bpd for sigma");
  return separated_descent_constant_for(p, r, ds.front(), admissible_left_chain(p), admissible_right_chain(r));
}

}  // namespace pipedream
