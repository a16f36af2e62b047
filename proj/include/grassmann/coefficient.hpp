#pragma once

#include <cctype>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "grassmann/error.hpp"

namespace grassmann {

// Arbitrary precision rational numbers.
class Rational {
public:
  Rational() = default;
  Rational(long v) : v_(v) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty coefficient");
    for (char c : s)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
        throw ParseError("bad coefficient '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad coefficient '" + std::string(text) + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  static std::string field_name() { return "rational"; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_unit() const { return !is_zero(); }
  bool is_negative() const { return sgn(v_) < 0; }

  Rational inv() const {
    if (is_zero()) throw NotAUnitError("division by zero");
    return Rational(mpq_class(1) / v_);
  }

  std::string to_string() const { return v_.get_str(); }
  const mpq_class &value() const { return v_; }

  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o) { return *this *= o.inv(); }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }

private:
  mpq_class v_;
};

// Residues modulo an odd prime. The modulus is per thread and set with
// Fp::Modulus; values created under one modulus must not meet another.
class Fp {
public:
  class Modulus {
  public:
    explicit Modulus(std::uint32_t p) : saved_(current()) {
      if (p < 3 || p % 2 == 0 || !is_prime(p) || p > 0xFFFFu * 0xFFFFu)
        throw DomainError("field modulus must be an odd prime, got " + std::to_string(p));
      current() = p;
    }
    ~Modulus() { current() = saved_; }
    Modulus(const Modulus &) = delete;
    Modulus &operator=(const Modulus &) = delete;

  private:
    std::uint32_t saved_;
  };

  Fp() = default;
  Fp(long v) {
    long p = static_cast<long>(modulus());
    long r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static std::uint32_t modulus() {
    std::uint32_t p = current();
    if (p == 0) throw DomainError("no prime modulus in scope");
    return p;
  }

  static Fp parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
      Fp num = parse(text.substr(0, slash));
      Fp den = parse(text.substr(slash + 1));
      if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
      return num * den.inv();
    }
    std::string s(text);
    if (s.empty()) throw ParseError("empty coefficient");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
    if (i == s.size()) throw ParseError("bad coefficient '" + s + "'");
    std::uint64_t r = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad coefficient '" + s + "'");
      r = (r * 10 + static_cast<std::uint64_t>(s[i] - '0')) % modulus();
    }
    Fp f = from_residue(static_cast<std::uint32_t>(r));
    return neg ? -f : f;
  }

  static std::string field_name() { return "F" + std::to_string(modulus()); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_unit() const { return v_ != 0; }
  bool is_negative() const { return false; }

  Fp inv() const {
    if (is_zero()) throw NotAUnitError("division by zero");
    // Fermat: v^(p-2)
    std::uint64_t p = modulus(), r = 1, b = v_, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return from_residue(static_cast<std::uint32_t>(r));
  }

  std::uint32_t residue() const { return v_; }
  std::string to_string() const { return std::to_string(v_); }

  Fp &operator+=(const Fp &o) {
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    if (s >= modulus()) s -= modulus();
    v_ = static_cast<std::uint32_t>(s);
    return *this;
  }
  Fp &operator-=(const Fp &o) { return *this += -o; }
  Fp &operator*=(const Fp &o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % modulus());
    return *this;
  }
  Fp &operator/=(const Fp &o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp &b) { return a += b; }
  friend Fp operator-(Fp a, const Fp &b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp &b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp &b) { return a /= b; }
  Fp operator-() const { return v_ == 0 ? *this : from_residue(modulus() - v_); }
  friend bool operator==(const Fp &a, const Fp &b) { return a.v_ == b.v_; }

  static Fp from_residue(std::uint32_t r) {
    Fp f;
    f.v_ = r;
    return f;
  }

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

private:
  static std::uint32_t &current() {
    thread_local std::uint32_t p = 0;
    return p;
  }

  std::uint32_t v_ = 0;
};

template <class K>
concept Coefficient = requires(K a, const K b, std::string_view s) {
  K(1L);
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { -b } -> std::same_as<K>;
  { b.inv() } -> std::same_as<K>;
  { b.is_zero() } -> std::same_as<bool>;
  { b.is_unit() } -> std::same_as<bool>;
  { b.to_string() } -> std::same_as<std::string>;
  { K::parse(s) } -> std::same_as<K>;
  { a == b } -> std::same_as<bool>;
};

static_assert(Coefficient<Rational>);
static_assert(Coefficient<Fp>);

}  // namespace grassmann
