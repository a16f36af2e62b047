#pragma once

#include <string>
#include <vector>

#include "grassmann/element.hpp"

namespace grassmann {

inline void check_index(int n, int i) {
  if (i < 1 || i > n)
    throw DimensionError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

// Left skew derivation with d_i(x_j) = delta_ij. On a monomial holding x_i at
// position k the sign is (-1)^(k-1).
template <Coefficient K>
Element<K> skew_partial(int i, const Element<K> &e) {
  check_index(e.n(), i);
  Mask b = bit(i);
  std::vector<typename Element<K>::Term> out;
  for (auto &[m, c] : e.terms()) {
    if (!(m & b)) continue;
    bool neg = std::popcount(m & (b - 1)) & 1;
    out.emplace_back(m & ~b, neg ? -c : c);
  }
  // Removing the same bit keeps masks distinct and sorted.
  return Element<K>::from_terms(e.n(), std::move(out));
}

// x_i * e
template <Coefficient K>
Element<K> left_mul(int i, const Element<K> &e) {
  return Element<K>::generator(e.n(), i) * e;
}

// phi_i = 1 - x_i d_i
template <Coefficient K>
Element<K> phi_i(int i, const Element<K> &e) {
  return e - left_mul(i, skew_partial(i, e));
}

// d^alpha = d_n^{a_n} ... d_1^{a_1}: the lowest index acts first.
// Every multi-index derivative in the library goes through here.
template <Coefficient K>
Element<K> partial_multi(Mask alpha, const Element<K> &e) {
  Element<K> r = e;
  for (int i : indices(alpha)) {
    r = skew_partial(i, r);
    if (r.is_zero()) break;
  }
  return r;
}

// d^alpha(e) for every alpha, indexed by mask.
template <Coefficient K>
std::vector<Element<K>> all_partials(const Element<K> &e) {
  int n = e.n();
  std::vector<Element<K>> d(std::size_t(1) << n, Element<K>(n));
  d[0] = e;
  for (Mask a = 1; a < (Mask(1) << n); ++a) {
    int top = 31 - std::countl_zero(a);
    const Element<K> &prev = d[a & ~(Mask(1) << top)];
    if (!prev.is_zero()) d[a] = skew_partial(top + 1, prev);
  }
  return d;
}

// phi = phi_n ... phi_1 applied as operators, read off as a scalar.
template <Coefficient K>
K phi_projection(const Element<K> &e) {
  Element<K> r = e;
  for (int i = 1; i <= e.n(); ++i) r = phi_i(i, r);
  if (!r.is_constant()) throw InternalError("projection left a non-scalar " + to_string(r));
  return r.constant_term();
}

// sum over alpha of (-1)^|alpha| x^alpha d^alpha(e)
template <Coefficient K>
Element<K> phi_expansion(const Element<K> &e) {
  int n = e.n();
  auto d = all_partials(e);
  Element<K> r(n);
  for (Mask a = 0; a < d.size(); ++a) {
    if (d[a].is_zero()) continue;
    Element<K> t = Element<K>::monomial(n, a) * d[a];
    r += (degree(a) % 2) ? -t : t;
  }
  return r;
}

enum class TaylorMode { AtZero, Projected };

// sum over alpha of d^alpha(e)(0) x^alpha, or of phi(d^alpha(e)) x^alpha.
template <Coefficient K>
Element<K> taylor_reconstruct(const Element<K> &e, TaylorMode mode) {
  int n = e.n();
  auto d = all_partials(e);
  std::vector<typename Element<K>::Term> out;
  for (Mask a = 0; a < d.size(); ++a) {
    if (d[a].is_zero()) continue;
    K c = mode == TaylorMode::AtZero ? d[a].substitute_zero(full_mask(n)).constant_term() : phi_projection(d[a]);
    if (!c.is_zero()) out.emplace_back(a, c);
  }
  return Element<K>::from_terms(n, std::move(out));
}

// x_1...x_n d_n...d_1 + sum_{i<n} x_1...x_i d_i...d_1 (1 - x_{i+1} d_{i+1}) + (1 - x_1 d_1)
// applied to e; the operator is the identity.
template <Coefficient K>
Element<K> identity_decomposition(const Element<K> &e) {
  int n = e.n();
  Element<K> r = phi_i(1, e);
  for (int i = 1; i < n; ++i) {
    Element<K> t = partial_multi(full_mask(i), phi_i(i + 1, e));
    r += Element<K>::monomial(n, full_mask(i)) * t;
  }
  r += Element<K>::monomial(n, full_mask(n)) * partial_multi(full_mask(n), e);
  return r;
}

}  // namespace grassmann
