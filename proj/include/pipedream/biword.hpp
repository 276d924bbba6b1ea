#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "pipedream/error.hpp"
#include "pipedream/permutation.hpp"

namespace pipedream {

// A biletter <a/k> with 1 <= a <= k.
struct Biletter {
  int a = 1;
  int k = 1;
  Biletter() = default;
  Biletter(int a_, int k_) : a(a_), k(k_) {
    if (a < 1 || a > k) fail(errc::bad_input, "biletter needs 1 <= a <= k");
  }
  friend bool operator==(const Biletter&, const Biletter&) = default;
  friend auto operator<=>(const Biletter&, const Biletter&) = default;
};

// A word of biletters whose label row is weakly decreasing.
class PlacticBiword {
 public:
  PlacticBiword() = default;
  explicit PlacticBiword(std::vector<Biletter> bs) : bs_(std::move(bs)) { check(); }
  PlacticBiword(std::vector<int> top, std::vector<int> bottom) {
    if (top.size() != bottom.size()) fail(errc::bad_input, "biword rows differ in length");
    for (size_t i = 0; i < top.size(); ++i) bs_.emplace_back(top[i], bottom[i]);
    check();
  }

  static bool is_plactic(const std::vector<Biletter>& bs) {
    for (size_t i = 0; i + 1 < bs.size(); ++i)
      if (bs[i].k < bs[i + 1].k) return false;
    return true;
  }

  const std::vector<Biletter>& biletters() const { return bs_; }
  size_t size() const { return bs_.size(); }
  bool empty() const { return bs_.empty(); }
  const Biletter& operator[](size_t i) const { return bs_[i]; }

  std::vector<int> top() const {
    std::vector<int> v;
    for (const auto& b : bs_) v.push_back(b.a);
    return v;
  }
  std::vector<int> bottom() const {
    std::vector<int> v;
    for (const auto& b : bs_) v.push_back(b.k);
    return v;
  }

  PlacticBiword concat(const PlacticBiword& other) const {
    std::vector<Biletter> bs = bs_;
    bs.insert(bs.end(), other.bs_.begin(), other.bs_.end());
    return PlacticBiword(std::move(bs));
  }

  friend bool operator==(const PlacticBiword&, const PlacticBiword&) = default;
  friend auto operator<=>(const PlacticBiword&, const PlacticBiword&) = default;

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < bs_.size(); ++i) os << (i ? "," : "") << bs_[i].a;
    os << " / ";
    for (size_t i = 0; i < bs_.size(); ++i) os << (i ? "," : "") << bs_[i].k;
    os << ")";
    return os.str();
  }

 private:
  void check() const {
    if (!is_plactic(bs_)) fail(errc::not_plactic, "label row must be weakly decreasing");
  }
  std::vector<Biletter> bs_;
};

// A saturated chain in mixed k-Bruhat order, recorded cover by cover.
struct DecoratedChain {
  Permutation start;
  std::vector<CoverData> steps;

  Permutation end() const {
    Permutation p = start;
    for (const auto& s : steps) p = p.with_swapped_positions(s.alpha, s.beta);
    return p;
  }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out{start};
    Permutation p = start;
    for (const auto& s : steps) {
      p = p.with_swapped_positions(s.alpha, s.beta);
      out.push_back(p);
    }
    return out;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (const auto& s : steps) out.push_back(s.label);
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    auto es = elements();
    os << es[0].str();
    for (size_t i = 0; i < steps.size(); ++i)
      os << " <" << steps[i].label << " " << es[i + 1].str();
    return os.str();
  }

  friend bool operator==(const DecoratedChain& x, const DecoratedChain& y) {
    if (!(x.start == y.start) || x.steps.size() != y.steps.size()) return false;
    for (size_t i = 0; i < x.steps.size(); ++i)
      if (x.steps[i].alpha != y.steps[i].alpha || x.steps[i].beta != y.steps[i].beta ||
          x.steps[i].label != y.steps[i].label)
        return false;
    return true;
  }
};

}  // namespace pipedream
