#pragma once

#include <random>
#include <vector>

#include "grassmann/endomorphism.hpp"
#include "grassmann/linsolve.hpp"

namespace grassmann {

using Rng = std::mt19937_64;

// Small nonzero scalars: numerators in [-3,3], denominators 1 or 2 over Q;
// uniform nonzero residues over F_p.
template <Coefficient K>
K random_scalar(Rng &rng) {
  if constexpr (std::is_same_v<K, Fp>) {
    std::uniform_int_distribution<long> d(1, Fp::modulus() - 1);
    return Fp(d(rng));
  } else {
    std::uniform_int_distribution<int> num(1, 3), sgn(0, 1), den(1, 2);
    K c(num(rng) * (sgn(rng) ? 1 : -1));
    return den(rng) == 2 ? c * K(2).inv() : c;
  }
}

// Each admissible monomial gets a random coefficient with probability `density`.
template <Coefficient K>
Element<K> random_element(int n, Rng &rng, auto admissible, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  std::vector<typename Element<K>::Term> t;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (admissible(m) && keep(rng)) t.emplace_back(m, random_scalar<K>(rng));
  return Element<K>::from_terms(n, std::move(t));
}

template <Coefficient K>
Element<K> random_odd(int n, Rng &rng, int min_degree, double density = 0.5) {
  return random_element<K>(n, rng, [&](Mask m) { return degree(m) % 2 == 1 && degree(m) >= min_degree; }, density);
}

template <Coefficient K>
Matrix<K> random_invertible_matrix(int n, Rng &rng) {
  std::bernoulli_distribution keep(0.5);
  for (;;) {
    Matrix<K> a(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i == j || keep(rng)) a(i, j) = random_scalar<K>(rng);
    if (!a.det().is_zero()) return a;
  }
}

// x_i -> x_i + b_i, b_i odd in m^3.
template <Coefficient K>
Endomorphism<K> random_gamma(int n, Rng &rng, double density = 0.5) {
  std::vector<Element<K>> b;
  for (int i = 0; i < n; ++i) b.push_back(random_odd<K>(n, rng, 3, density));
  return gamma_shift(b);
}

// omega_{1+a}, a odd without a top term.
template <Coefficient K>
Endomorphism<K> random_omega(int n, Rng &rng, double density = 0.5) {
  Element<K> a = random_odd<K>(n, rng, 1, density).filter([n](Mask m) { return degree(m) < n; });
  return inner(Element<K>::one(n) + a);
}

template <Coefficient K>
Endomorphism<K> random_automorphism(int n, Rng &rng, double density = 0.5) {
  return random_omega<K>(n, rng, density) * random_gamma<K>(n, rng, density) *
         linear(random_invertible_matrix<K>(n, rng));
}

// Linear part the identity.
template <Coefficient K>
Endomorphism<K> random_unipotent(int n, Rng &rng, double density = 0.5) {
  return random_omega<K>(n, rng, density) * random_gamma<K>(n, rng, density);
}

// x_i -> x_i (1 + c_i), c_i even of degree >= 2 and free of x_i.
template <Coefficient K>
Endomorphism<K> random_phi(int n, Rng &rng, double density = 0.5) {
  auto im = Endomorphism<K>::identity(n).images();
  for (int i = 1; i <= n; ++i) {
    Element<K> c = random_element<K>(
        n, rng, [&](Mask m) { return degree(m) >= 2 && degree(m) % 2 == 0 && !has(m, i); }, density);
    im[i - 1] += im[i - 1] * c;
  }
  return Endomorphism<K>::trusted(std::move(im));
}

// Product of `length` random kernel generators rho_{i,j(alpha);c x^alpha}.
template <Coefficient K>
Endomorphism<K> random_sigma_prime(int n, Rng &rng, int length = 6) {
  Endomorphism<K> r = Endomorphism<K>::identity(n);
  std::vector<std::pair<int, Mask>> pool;
  for (int s = 1; s <= max_layer(n); ++s)
    for (int i = 1; i < n; ++i)
      for (Mask a : avoidance_domain(n, i, s)) pool.emplace_back(i, a);
  if (pool.empty()) return r;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < length; ++k) {
    auto [i, a] = pool[pick(rng)];
    r = r * rho(n, i, avoidance(n, i, a), a, random_scalar<K>(rng));
  }
  return r;
}

// Product of random shifts x_i -> x_i + c x^alpha with alpha odd, |alpha| >= 3, i not in alpha.
// Each factor has Jacobian 1.
template <Coefficient K>
Endomorphism<K> random_sigma(int n, Rng &rng, int length = 6) {
  Endomorphism<K> r = random_sigma_prime<K>(n, rng, length / 2);
  std::vector<std::pair<int, Mask>> pool;
  for (int i = 1; i <= n; ++i)
    for (Mask a = 0; a < (Mask(1) << n); ++a)
      if (degree(a) >= 3 && degree(a) % 2 == 1 && !has(a, i)) pool.emplace_back(i, a);
  if (pool.empty()) return r;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < length; ++k) {
    auto [i, a] = pool[pick(rng)];
    r = r * shift(i, Element<K>::monomial(n, a, random_scalar<K>(rng)));
  }
  return r;
}

// x_i -> x_i + lambda_i x_1...x_n: the top-degree shifts.
template <Coefficient K>
Endomorphism<K> random_top_shift(int n, Rng &rng) {
  std::vector<K> l;
  for (int i = 0; i < n; ++i) l.push_back(random_scalar<K>(rng));
  return top_shift(n, l);
}

}  // namespace grassmann
