#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grassmann/coefficient.hpp"
#include "grassmann/error.hpp"

namespace grassmann {

// Bit i-1 of a mask stands for the generator x_i.
using Mask = std::uint32_t;

inline constexpr int kMaxN = 16;

inline int degree(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1; }

inline Mask bit(int i) { return Mask(1) << (i - 1); }

inline bool has(Mask m, int i) { return (m >> (i - 1)) & 1u; }

// Sign of x^a x^b = sign * x^(a|b) for disjoint a, b: (-1) raised to the
// number of pairs (p in a, q in b) with p > q.
inline int merge_sign(Mask a, Mask b) {
  int inv = 0;
  while (b) {
    int q = std::countr_zero(b);
    b &= b - 1;
    inv += std::popcount(a >> (q + 1));
  }
  return (inv & 1) ? -1 : 1;
}

// Ascending list of 1-based indices in a mask.
inline std::vector<int> indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(std::initializer_list<int> idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

// Degree first, then lexicographic on the ascending index lists.
inline bool display_less(Mask a, Mask b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  if (a == b) return false;
  Mask d = a ^ b;
  return (a & d & (~d + 1)) != 0;
}

inline void check_n(int n) {
  if (n < 1 || n > kMaxN)
    throw DimensionError("generator count must be in 1.." + std::to_string(kMaxN) + ", got " +
                         std::to_string(n));
}

struct Component {
  enum Kind { Degree, Even, Odd } kind;
  int d = 0;
  static Component degree(int d) { return {Degree, d}; }
  static Component even() { return {Even, 0}; }
  static Component odd() { return {Odd, 0}; }
};

template <Coefficient K>
class Element {
public:
  using Coef = K;
  using Term = std::pair<Mask, K>;

  Element() = default;
  explicit Element(int n) : n_(n) { check_n(n); }

  static Element constant(int n, const K &c) { return monomial(n, 0, c); }
  static Element one(int n) { return constant(n, K(1)); }

  static Element generator(int n, int i, const K &c = K(1)) {
    check_n(n);
    if (i < 1 || i > n) throw DimensionError("generator index " + std::to_string(i) + " out of range");
    return monomial(n, bit(i), c);
  }

  static Element monomial(int n, Mask m, const K &c = K(1)) {
    Element e(n);
    if (m & ~full_mask(n)) throw DimensionError("monomial outside the generator range");
    if (!c.is_zero()) e.terms_.emplace_back(m, c);
    return e;
  }

  // Sorts and merges arbitrary (mask, coefficient) pairs.
  static Element from_terms(int n, std::vector<Term> terms) {
    Element e(n);
    for (auto &t : terms)
      if (t.first & ~full_mask(n)) throw DimensionError("monomial outside the generator range");
    e.terms_ = std::move(terms);
    e.canonicalize();
    return e;
  }

  int n() const { return n_; }
  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  K coeff(Mask m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term &t, Mask v) { return t.first < v; });
    return (it != terms_.end() && it->first == m) ? it->second : K(0);
  }
  K constant_term() const { return coeff(0); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return degree(t.first) % 2 == 0; });
  }
  bool is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return degree(t.first) % 2 == 1; });
  }
  bool is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term &t) { return degree(t.first) == d; });
  }

  // Lowest degree present, n+1 for zero.
  int min_degree() const {
    int d = n_ + 1;
    for (auto &t : terms_) d = std::min(d, degree(t.first));
    return d;
  }
  int max_degree() const {
    int d = -1;
    for (auto &t : terms_) d = std::max(d, degree(t.first));
    return d;
  }

  // Whether every term lies in m^d.
  bool in_power_of_m(int d) const { return min_degree() >= d; }

  template <class Pred>
  Element filter(Pred keep) const {
    Element e(n_);
    for (auto &t : terms_)
      if (keep(t.first)) e.terms_.push_back(t);
    return e;
  }

  Element part(Component c) const {
    switch (c.kind) {
      case Component::Degree: return filter([d = c.d](Mask m) { return degree(m) == d; });
      case Component::Even: return filter([](Mask m) { return degree(m) % 2 == 0; });
      case Component::Odd: return filter([](Mask m) { return degree(m) % 2 == 1; });
    }
    return *this;
  }
  Element degree_part(int d) const { return part(Component::degree(d)); }
  Element even_part() const { return part(Component::even()); }
  Element odd_part() const { return part(Component::odd()); }
  Element degrees_at_least(int d) const { return filter([d](Mask m) { return degree(m) >= d; }); }

  // Terms whose mask avoids s (setting the generators in s to zero).
  Element substitute_zero(Mask s) const { return filter([s](Mask m) { return (m & s) == 0; }); }

  // Whether no term involves a generator from s.
  bool avoids(Mask s) const {
    return std::all_of(terms_.begin(), terms_.end(), [s](const Term &t) { return (t.first & s) == 0; });
  }

  Element involution() const {
    Element e = *this;
    for (auto &t : e.terms_)
      if (degree(t.first) % 2) t.second = -t.second;
    return e;
  }

  Element operator-() const {
    Element e = *this;
    for (auto &t : e.terms_) t.second = -t.second;
    return e;
  }

  Element &operator+=(const Element &o) { return *this = add(*this, o, false); }
  Element &operator-=(const Element &o) { return *this = add(*this, o, true); }
  Element &operator*=(const Element &o) { return *this = mul(*this, o); }
  Element &operator*=(const K &c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &t : terms_) t.second *= c;
    std::erase_if(terms_, [](const Term &t) { return t.second.is_zero(); });
    return *this;
  }

  friend Element operator+(const Element &a, const Element &b) { return add(a, b, false); }
  friend Element operator-(const Element &a, const Element &b) { return add(a, b, true); }
  friend Element operator*(const Element &a, const Element &b) { return mul(a, b); }
  friend Element operator*(const K &c, Element a) { return a *= c; }
  friend Element operator*(Element a, const K &c) { return a *= c; }
  friend bool operator==(const Element &a, const Element &b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  static Element mul(const Element &a, const Element &b) {
    if (a.n_ != b.n_) throw DimensionError("mismatched generator counts " + std::to_string(a.n_) + " and " +
                                           std::to_string(b.n_));
    Element e(a.n_);
    if (a.is_zero() || b.is_zero()) return e;
    e.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (auto &[ma, ca] : a.terms_)
      for (auto &[mb, cb] : b.terms_) {
        if (ma & mb) continue;
        K c = ca * cb;
        if (merge_sign(ma, mb) < 0) c = -c;
        e.terms_.emplace_back(ma | mb, std::move(c));
      }
    e.canonicalize();
    return e;
  }

private:
  static Element add(const Element &a, const Element &b, bool subtract) {
    if (a.n_ != b.n_) throw DimensionError("mismatched generator counts " + std::to_string(a.n_) + " and " +
                                           std::to_string(b.n_));
    Element e(a.n_);
    e.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        e.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        e.terms_.emplace_back(j->first, subtract ? -j->second : j->second);
        ++j;
      } else {
        K c = subtract ? i->second - j->second : i->second + j->second;
        if (!c.is_zero()) e.terms_.emplace_back(i->first, std::move(c));
        ++i, ++j;
      }
    }
    return e;
  }

  void canonicalize() {
    std::stable_sort(terms_.begin(), terms_.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Mask m = terms_[r].first;
      K c = std::move(terms_[r].second);
      for (++r; r < terms_.size() && terms_[r].first == m; ++r) c += terms_[r].second;
      if (!c.is_zero()) terms_[w++] = Term(m, std::move(c));
    }
    terms_.resize(w);
  }

  int n_ = 0;
  std::vector<Term> terms_;
};

template <Coefficient K>
Element<K> mul(const Element<K> &e, const Element<K> &f) {
  return Element<K>::mul(e, f);
}

template <Coefficient K>
Element<K> component(const Element<K> &e, Component c) {
  return e.part(c);
}

template <Coefficient K>
Element<K> involution(const Element<K> &e) {
  return e.involution();
}

template <Coefficient K>
Element<K> substitute_zero(const Element<K> &e, Mask s) {
  return e.substitute_zero(s);
}

// e^{-1} = c^{-1} sum_k (-c^{-1} m)^k where c is the constant term and m = e - c.
template <Coefficient K>
Element<K> invert_unit(const Element<K> &e) {
  K c = e.constant_term();
  if (!c.is_unit()) throw NotAUnitError("constant term " + c.to_string() + " is not invertible");
  K ci = c.inv();
  Element<K> m = e - Element<K>::constant(e.n(), c);
  Element<K> step = (-ci) * m;
  Element<K> sum = Element<K>::one(e.n()), power = sum;
  for (int k = 1; k <= e.n(); ++k) {
    power = power * step;
    if (power.is_zero()) break;
    sum += power;
  }
  return ci * sum;
}

template <Coefficient K>
Element<K> power(const Element<K> &e, int k) {
  Element<K> r = Element<K>::one(e.n());
  for (int i = 0; i < k; ++i) r = r * e;
  return r;
}

// Graded commutator [a, b] = ab - ba.
template <Coefficient K>
Element<K> commutator(const Element<K> &a, const Element<K> &b) {
  return a * b - b * a;
}

inline std::string monomial_string(Mask m) {
  std::string s;
  for (int i : indices(m)) s += "x" + std::to_string(i);
  return s;
}

template <Coefficient K>
std::string to_string(const Element<K> &e) {
  if (e.is_zero()) return "0";
  auto terms = e.terms();
  std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) { return display_less(a.first, b.first); });
  std::string out;
  bool first = true;
  for (auto &[m, c] : terms) {
    std::string t;
    if (m == 0) {
      t = c.to_string();
    } else {
      std::string cs = c.to_string();
      if (cs == "1") t = monomial_string(m);
      else if (cs == "-1") t = "-" + monomial_string(m);
      else t = cs + "*" + monomial_string(m);
    }
    if (first) {
      out = t;
      first = false;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

// Parses a signed sum of terms such as "1 - 3/2*x1x3 + x2x4". Factors in a
// term multiply left to right, so "x2x1" reads as -x1x2.
template <Coefficient K>
Element<K> parse_element(int n, std::string_view text) {
  check_n(n);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty expression");
  Element<K> result(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string &why) {
    throw ParseError(why + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto read_digits = [&]() {
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(b, pos - b);
  };
  bool first = true;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Element<K> term = Element<K>::one(n);
    bool any = false;
    while (true) {
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::string num = read_digits();
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          std::string den = read_digits();
          if (den.empty()) fail("missing denominator");
          num += "/" + den;
        }
        term *= K::parse(num);
        any = true;
      } else if (pos < s.size() && s[pos] == 'x') {
        while (pos < s.size() && s[pos] == 'x') {
          ++pos;
          std::string idx = read_digits();
          if (idx.empty()) fail("missing generator index");
          int i = std::stoi(idx);
          if (i < 1 || i > n) fail("generator x" + idx + " outside 1.." + std::to_string(n));
          term = term * Element<K>::generator(n, i);
        }
        any = true;
      } else {
        fail("expected a coefficient or a generator");
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == 'x') continue;
      break;
    }
    if (!any) fail("empty term");
    result += neg ? -term : term;
  }
  return result;
}

}  // namespace grassmann
