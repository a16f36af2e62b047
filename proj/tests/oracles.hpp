#pragma once

// Slow reference implementations, written without the library's sign or
// substitution machinery.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "grassmann/grassmann.hpp"

namespace oracle {

using grassmann::Element;
using grassmann::Mask;

// Multiplies monomials by writing out the letters and bubble-sorting them,
// flipping the sign on every swap.
template <class K>
Element<K> mul(const Element<K> &a, const Element<K> &b) {
  int n = a.n();
  std::map<Mask, K> acc;
  for (auto &[ma, ca] : a.terms())
    for (auto &[mb, cb] : b.terms()) {
      std::vector<int> w = grassmann::indices(ma);
      for (int i : grassmann::indices(mb)) w.push_back(i);
      int sign = 1;
      bool zero = false;
      for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q = 0; q + 1 < w.size() - p; ++q) {
          if (w[q] == w[q + 1]) zero = true;
          if (w[q] > w[q + 1]) {
            std::swap(w[q], w[q + 1]);
            sign = -sign;
          }
        }
      for (std::size_t q = 0; q + 1 < w.size(); ++q)
        if (w[q] == w[q + 1]) zero = true;
      if (zero) continue;
      Mask m = 0;
      for (int i : w) m |= grassmann::bit(i);
      K c = ca * cb;
      acc[m] += sign > 0 ? c : -c;
    }
  std::vector<std::pair<Mask, K>> t(acc.begin(), acc.end());
  return Element<K>::from_terms(n, std::move(t));
}

// d_i on a monomial with x_i at (1-based) position k is (-1)^{k-1} times the rest.
template <class K>
Element<K> skew_partial(int i, const Element<K> &e) {
  std::vector<std::pair<Mask, K>> t;
  for (auto &[m, c] : e.terms()) {
    auto w = grassmann::indices(m);
    auto it = std::find(w.begin(), w.end(), i);
    if (it == w.end()) continue;
    long k = it - w.begin();
    t.emplace_back(m & ~grassmann::bit(i), k % 2 ? -c : c);
  }
  return Element<K>::from_terms(e.n(), std::move(t));
}

// Substitution with every product formed by the oracle multiplication.
template <class K>
Element<K> apply(const std::vector<Element<K>> &images, const Element<K> &e) {
  int n = e.n();
  Element<K> r(n);
  for (auto &[m, c] : e.terms()) {
    Element<K> p = Element<K>::constant(n, c);
    for (int i : grassmann::indices(m)) p = mul(p, images[i - 1]);
    r += p;
  }
  return r;
}

// Leibniz formula over a matrix of commuting entries.
template <class K>
Element<K> det(const std::vector<std::vector<Element<K>>> &m, int n) {
  int k = static_cast<int>(m.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Element<K> r(n);
  do {
    int inv = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inv;
    Element<K> p = Element<K>::one(n);
    for (int a = 0; a < k; ++a) p = mul(p, m[a][perm[a]]);
    r += inv % 2 ? -p : p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

template <class K>
Element<K> jacobian_det(const grassmann::Endomorphism<K> &s) {
  int n = s.n();
  std::vector<std::vector<Element<K>>> m(n, std::vector<Element<K>>(n, Element<K>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = skew_partial(j + 1, s.image(i + 1));
  return det(m, n);
}

}  // namespace oracle
