#pragma once

#include <string>
#include <vector>

#include "grassmann/element.hpp"
#include "grassmann/skew.hpp"

namespace grassmann {

// a = x_1...x_n a_n + sum_{i=1}^{n-1} x_1...x_i b_{i+1} + b_1 with
// b_{i+1} in K<x_{i+2},...,x_n> and b_1 free of x_1. b_n and a_n are scalars.
template <Coefficient K>
struct CoordinateSplit {
  K top;                     // a_n
  std::vector<Element<K>> b;  // b[0] = b_1, ..., b[n-1] = b_n

  K a_n() const { return top; }
  K b_n() const { return b.back().constant_term(); }

  Element<K> reassemble() const {
    int n = static_cast<int>(b.size());
    Element<K> r = Element<K>::monomial(n, full_mask(n), top) + b[0];
    for (int i = 1; i < n; ++i) r += Element<K>::monomial(n, full_mask(i)) * b[i];
    return r;
  }
};

template <Coefficient K>
CoordinateSplit<K> coordinate_split(const Element<K> &a) {
  int n = a.n();
  CoordinateSplit<K> cs;
  Element<K> an = partial_multi(full_mask(n), a);
  cs.top = an.constant_term();
  cs.b.push_back(phi_i(1, a));
  for (int i = 1; i < n; ++i) cs.b.push_back(partial_multi(full_mask(i), phi_i(i + 1, a)));
  return cs;
}

// Whether each part of a coordinate split lives in its prescribed subalgebra.
template <Coefficient K>
bool split_supports_ok(const CoordinateSplit<K> &cs) {
  int n = static_cast<int>(cs.b.size());
  if (!cs.b[0].avoids(bit(1))) return false;
  for (int i = 1; i < n; ++i)
    if (!cs.b[i].avoids(full_mask(i + 1))) return false;
  return true;
}

// All solutions of a system form particular + K * direction.
template <Coefficient K>
struct SolutionFamily {
  Element<K> particular;
  Element<K> direction;
};

// Solves x_i a = u_i for all i. Needs (i) u_i in (x_i) and
// (ii) x_i u_j = -x_j u_i for i != j; the free direction is x_1...x_n.
template <Coefficient K>
SolutionFamily<K> solve_xi_system(const std::vector<Element<K>> &u) {
  int n = static_cast<int>(u.size());
  check_n(n);
  for (auto &e : u)
    if (e.n() != n) throw DimensionError("right-hand side lives in a different algebra");
  for (int i = 1; i <= n; ++i)
    if (!left_mul(i, u[i - 1]).is_zero()) throw UnsolvableError("(i)", i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(left_mul(i, u[j - 1]) + left_mul(j, u[i - 1])).is_zero()) throw UnsolvableError("(ii)", i, j);
  Element<K> a = skew_partial(1, u[0]);
  for (int i = 1; i < n; ++i)
    a += Element<K>::monomial(n, full_mask(i)) * partial_multi(full_mask(i), skew_partial(i + 1, u[i]));
  for (int i = 1; i <= n; ++i)
    if (!(left_mul(i, a) == u[i - 1])) throw InternalError("xi-system solution fails at i=" + std::to_string(i));
  return {a, Element<K>::monomial(n, full_mask(n))};
}

// Solves d_i(a) = u_i for all i. Needs (i) u_i free of x_i and
// (ii) d_i(u_j) = -d_j(u_i) for i != j; the free direction is 1.
template <Coefficient K>
SolutionFamily<K> solve_partial_system(const std::vector<Element<K>> &u) {
  int n = static_cast<int>(u.size());
  check_n(n);
  for (auto &e : u)
    if (e.n() != n) throw DimensionError("right-hand side lives in a different algebra");
  for (int i = 1; i <= n; ++i)
    if (!u[i - 1].avoids(bit(i))) throw UnsolvableError("(i)", i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(skew_partial(i, u[j - 1]) + skew_partial(j, u[i - 1])).is_zero()) throw UnsolvableError("(ii)", i, j);
  std::vector<typename Element<K>::Term> terms;
  for (Mask a = 1; a < (Mask(1) << n); ++a) {
    int lo = std::countr_zero(a);
    // u_alpha = d_{i_k} ... d_{i_2} (u_{i_1})
    Element<K> ua = partial_multi(a & ~(Mask(1) << lo), u[lo]);
    K c = phi_projection(ua);
    if (!c.is_zero()) terms.emplace_back(a, c);
  }
  Element<K> sol = Element<K>::from_terms(n, std::move(terms));
  for (int i = 1; i <= n; ++i)
    if (!(skew_partial(i, sol) == u[i - 1]))
      throw InternalError("partial-system solution fails at i=" + std::to_string(i));
  return {sol, Element<K>::one(n)};
}

// ---------------------------------------------------------------------------
// Degree-2s split and the kernel of the symbol-sum map

inline int max_layer(int n) { return (n - 1) / 2; }

inline void check_layer(int n, int s) {
  if (s < 1 || s > max_layer(n))
    throw DomainError("layer s=" + std::to_string(s) + " outside 1.." + std::to_string(max_layer(n)));
}

// Monomials of A_i: alpha contains {i+1..n} and avoids i.
inline bool in_layer_module(int n, int i, Mask alpha) {
  Mask tail = full_mask(n) & ~full_mask(i);
  return !has(alpha, i) && (alpha & tail) == tail;
}

// Slot of a degree-2s monomial: the largest index outside alpha.
inline int layer_slot(int n, Mask alpha) {
  Mask out = full_mask(n) & ~alpha;
  return 32 - std::countl_zero(out);
}

// a = a_{n-2s} + ... + a_n with a_i in A_i.
template <Coefficient K>
struct LayerSplit {
  int s = 0;
  std::vector<Element<K>> parts;  // parts[i] for i = 0..n, zero below n-2s

  Element<K> part(int i) const { return parts.at(i); }
  Element<K> sum() const {
    Element<K> r = parts.at(0);
    for (std::size_t i = 1; i < parts.size(); ++i) r += parts[i];
    return r;
  }
};

template <Coefficient K>
LayerSplit<K> layer_split(const Element<K> &a, int s) {
  int n = a.n();
  check_layer(n, s);
  if (!a.is_homogeneous(2 * s)) throw DomainError("layer split needs a homogeneous element of degree 2s");
  std::vector<std::vector<typename Element<K>::Term>> slots(n + 1);
  for (auto &[m, c] : a.terms()) slots[layer_slot(n, m)].emplace_back(m, c);
  LayerSplit<K> ls{s, {}};
  for (int i = 0; i <= n; ++i) ls.parts.push_back(Element<K>::from_terms(n, std::move(slots[i])));
  for (int i = 0; i <= n; ++i)
    for (auto &[m, c] : ls.parts[i].terms())
      if (i < n - 2 * s || !in_layer_module(n, i, m)) throw InternalError("layer split support violated");
  return ls;
}

// Canonical avoidance function: the least index above i missing from alpha.
inline int avoidance(int n, int i, Mask alpha) {
  for (int j = i + 1; j <= n; ++j)
    if (!has(alpha, j)) return j;
  return 0;
}

// S'_{i,s}: degree-2s subsets of [n] \ {i} not containing {i+1..n}, ascending by mask.
inline std::vector<Mask> avoidance_domain(int n, int i, int s) {
  std::vector<Mask> out;
  Mask tail = full_mask(n) & ~full_mask(i);
  for (Mask a = 0; a < (Mask(1) << n); ++a) {
    if (degree(a) != 2 * s || has(a, i)) continue;
    if ((a & tail) == tail) continue;
    out.push_back(a);
  }
  return out;
}

template <Coefficient K>
struct KernelCoordinate {
  int s, i, j;
  Mask alpha;
  K lambda;
};

template <Coefficient K>
struct KernelSplit {
  std::vector<KernelCoordinate<K>> coordinates;  // every (i, alpha) of the basis, in extraction order
  LayerSplit<K> residual;
};

// v = sum lambda x^alpha (e_i - e_{j(alpha)}) + f-part, read off greedily.
template <Coefficient K>
KernelSplit<K> kernel_split(std::vector<Element<K>> v, int s) {
  int n = static_cast<int>(v.size());
  check_n(n);
  check_layer(n, s);
  for (int i = 1; i <= n; ++i) {
    if (!v[i - 1].is_homogeneous(2 * s)) throw DomainError("kernel split needs degree-2s entries");
    if (!v[i - 1].avoids(bit(i))) throw DomainError("entry " + std::to_string(i) + " involves x" + std::to_string(i));
  }
  KernelSplit<K> ks;
  for (int i = 1; i < n; ++i) {
    for (Mask a : avoidance_domain(n, i, s)) {
      int j = avoidance(n, i, a);
      K lambda = v[i - 1].coeff(a);
      if (!lambda.is_zero()) {
        Element<K> t = Element<K>::monomial(n, a, lambda);
        v[i - 1] -= t;
        v[j - 1] += t;
      }
      ks.coordinates.push_back({s, i, j, a, lambda});
    }
  }
  ks.residual.s = s;
  ks.residual.parts.assign(n + 1, Element<K>(n));
  for (int i = 1; i <= n; ++i) {
    for (auto &[m, c] : v[i - 1].terms())
      if (i < n - 2 * s || !in_layer_module(n, i, m))
        throw InternalError("kernel split residual leaves the section module at i=" + std::to_string(i));
    ks.residual.parts[i] = v[i - 1];
  }
  return ks;
}

// Number of kernel coordinates n C(n-1,2s) - C(n,2s), by enumeration.
inline long kernel_rank(int n, int s) {
  long r = 0;
  for (int i = 1; i <= n; ++i) r += static_cast<long>(avoidance_domain(n, i, s).size());
  return r;
}

}  // namespace grassmann
