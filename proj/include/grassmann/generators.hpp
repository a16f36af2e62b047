#pragma once

#include <map>
#include <string>
#include <vector>

#include "grassmann/groups.hpp"

namespace grassmann {

// One-parameter subgroups lambda -> generator(lambda).
struct GeneratorDescriptor {
  enum Kind {
    SigmaGen,  // x_i -> x_i + lambda x^alpha, i not in alpha
    RhoGen,    // x_i -> x_i (1 + lambda x^alpha), x_j -> x_j (1 - lambda x^alpha)
    XiGen,     // x_i -> x_i + lambda x^alpha, any odd alpha
    OmegaGen,  // omega_{1 + lambda x^alpha}
  } kind;
  int i = 0, j = 0;
  Mask alpha = 0;

  friend bool operator==(const GeneratorDescriptor &, const GeneratorDescriptor &) = default;
};

inline std::string to_string(const GeneratorDescriptor &d, int n) {
  std::string m = monomial_string(d.alpha);
  switch (d.kind) {
    case GeneratorDescriptor::SigmaGen:
    case GeneratorDescriptor::XiGen: return "x" + std::to_string(d.i) + " -> x" + std::to_string(d.i) + " + t*" + m;
    case GeneratorDescriptor::RhoGen:
      return "x" + std::to_string(d.i) + " -> x" + std::to_string(d.i) + "(1 + t*" + m + "); x" + std::to_string(d.j) +
             " -> x" + std::to_string(d.j) + "(1 - t*" + m + ")";
    case GeneratorDescriptor::OmegaGen: return "inner(1 + t*" + m + ")";
  }
  (void)n;
  return "?";
}

template <Coefficient K>
Endomorphism<K> instantiate(const GeneratorDescriptor &d, int n, const K &lambda) {
  switch (d.kind) {
    case GeneratorDescriptor::SigmaGen:
    case GeneratorDescriptor::XiGen: return shift(d.i, Element<K>::monomial(n, d.alpha, lambda));
    case GeneratorDescriptor::RhoGen: return rho(n, d.i, d.j, d.alpha, lambda);
    case GeneratorDescriptor::OmegaGen: return inner(Element<K>::one(n) + Element<K>::monomial(n, d.alpha, lambda));
  }
  throw InternalError("unknown generator kind");
}

namespace detail {

inline void triples(int n, auto f) {
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l) f(bit(j) | bit(k) | bit(l));
}

inline std::vector<GeneratorDescriptor> sigma_triples_avoiding(int n) {
  std::vector<GeneratorDescriptor> g;
  for (int i = 1; i <= n; ++i)
    triples(n, [&](Mask a) {
      if (!has(a, i)) g.push_back({GeneratorDescriptor::SigmaGen, i, 0, a});
    });
  return g;
}

}  // namespace detail

// Gamma: all x_i -> x_i + t x_j x_k x_l.  U: those and the inner omega_{1+t x_i}.
// Phi: x_i -> x_i + t x_i x_k x_l.  Sigma'' (n >= 4): x_i -> x_i + t x_j x_k x_l with
// i outside {j,k,l}, plus x_i -> x_i + t x_1..^x_i..x_n for n = 6.  Sigma (n >= 7): the
// s = 1 kernel generators together with the Sigma'' family.
inline std::vector<GeneratorDescriptor> enumerate_generators(const GroupId &g, int n) {
  check_n(n);
  std::vector<GeneratorDescriptor> out;
  switch (g.kind) {
    case GroupKind::Gamma:
    case GroupKind::U:
      if (n < 3) throw UnsupportedError("generators of " + to_string(g) + " need n >= 3");
      for (int i = 1; i <= n; ++i)
        detail::triples(n, [&](Mask a) { out.push_back({GeneratorDescriptor::XiGen, i, 0, a}); });
      if (g.kind == GroupKind::U)
        for (int i = 1; i <= n; ++i) out.push_back({GeneratorDescriptor::OmegaGen, 0, 0, bit(i)});
      return out;
    case GroupKind::Phi:
      if (n < 3) throw UnsupportedError("generators of phi need n >= 3");
      for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            if (k != i && l != i) out.push_back({GeneratorDescriptor::XiGen, i, 0, bit(i) | bit(k) | bit(l)});
      return out;
    case GroupKind::SigmaDoublePrime:
      if (n < 4) throw UnsupportedError("generators of sigma_double_prime need n >= 4");
      out = detail::sigma_triples_avoiding(n);
      if (n == 6)
        for (int i = 1; i <= n; ++i)
          out.push_back({GeneratorDescriptor::SigmaGen, i, 0, full_mask(n) & ~bit(i)});
      return out;
    case GroupKind::Sigma:
      if (n < 7) throw UnsupportedError("generators of sigma are given for n >= 7");
      for (int i = 1; i < n; ++i)
        for (Mask a : avoidance_domain(n, i, 1)) out.push_back({GeneratorDescriptor::RhoGen, i, avoidance(n, i, a), a});
      for (auto &d : detail::sigma_triples_avoiding(n)) out.push_back(d);
      return out;
    default: throw UnsupportedError("no generator family for " + to_string(g));
  }
}

// Dimension of the Lie algebra generated by the tangent vectors of the given
// one-parameter subgroups. Each tangent is the derivation x_i -> d_i.
template <Coefficient K>
class LieSpan {
public:
  using Derivation = std::vector<Element<K>>;

  explicit LieSpan(int n) : n_(n) {}

  int n() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }

  // d(e) = sum_k d_k * skew_partial_k(e) for an even derivation d.
  Element<K> apply(const Derivation &d, const Element<K> &e) const {
    Element<K> r(n_);
    for (int k = 1; k <= n_; ++k)
      if (!d[k - 1].is_zero()) r += d[k - 1] * skew_partial(k, e);
    return r;
  }

  Derivation bracket(const Derivation &a, const Derivation &b) const {
    Derivation r;
    for (int i = 0; i < n_; ++i) r.push_back(apply(a, b[i]) - apply(b, a[i]));
    return r;
  }

  // Adds d to the span; returns whether the dimension grew.
  bool add(const Derivation &d) {
    std::map<long, K> v;
    for (int i = 0; i < n_; ++i)
      for (auto &[m, c] : d[i].terms()) v[key(i, m)] = c;
    reduce(v);
    if (v.empty()) return false;
    long pivot = v.begin()->first;
    K inv = v.begin()->second.inv();
    for (auto &[k, c] : v) c *= inv;
    rows_[pivot] = std::move(v);
    basis_.push_back(d);
    return true;
  }

  // Closure under brackets with the generators.
  void close(const std::vector<Derivation> &gens) {
    for (auto &g : gens) add(g);
    for (std::size_t next = 0; next < basis_.size(); ++next)
      for (auto &g : gens) add(bracket(g, basis_[next]));
  }

  static Derivation tangent(const Endomorphism<K> &at_one) {
    Derivation d;
    for (int i = 1; i <= at_one.n(); ++i) d.push_back(at_one.image(i) - Element<K>::generator(at_one.n(), i));
    return d;
  }

private:
  long key(int i, Mask m) const { return (static_cast<long>(i) << kMaxN) | m; }

  void reduce(std::map<long, K> &v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      K f = it->second;
      long k0 = it->first;
      for (auto &[k, c] : row->second) {
        K &t = v[k];
        t -= f * c;
      }
      for (auto jt = v.begin(); jt != v.end();) jt = jt->second.is_zero() ? v.erase(jt) : std::next(jt);
      it = v.upper_bound(k0 - 1);
    }
  }

  int n_;
  std::vector<Derivation> basis_;
  std::map<long, std::map<long, K>> rows_;
};

template <Coefficient K>
std::size_t generated_lie_dimension(const std::vector<GeneratorDescriptor> &gens, int n) {
  LieSpan<K> span(n);
  std::vector<typename LieSpan<K>::Derivation> t;
  for (auto &d : gens) t.push_back(LieSpan<K>::tangent(instantiate(d, n, K(1))));
  span.close(t);
  return span.dimension();
}

}  // namespace grassmann
