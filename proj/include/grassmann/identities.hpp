#pragma once

#include <set>
#include <string>
#include <vector>

#include "grassmann/groups.hpp"
#include "grassmann/random.hpp"

namespace grassmann {

enum class IdentityTag {
  ShiftCommutatorCross,      // [s_{i,l x_i x_j x^a}, s_{j,m x_j x^b}] = s_{i,-lm x_i x_j x^b x^a}
  ShiftCommutatorSameIndex,  // [s_{i,l x_i x^a}, s_{i,m x^b}] = s_{i,-lm x^b x^a}
  ShiftWordCross,
  ShiftWordSameIndex,
  XiCommutatorCross,         // [xi_{i,l x_j x^a}, xi_{j,m x^b}] = xi_{i,-lm x^a x^b}
  XiCommutatorTrivial,       // [xi_{i,l x^a}, xi_{j,m x^b}] = e
  XiCommutatorDiagonal,      // [xi_{i,l x_j x^a}, xi_{j,m x_i x^b}] = x_i(1 - lm x^a x^b), x_j(1 + lm x^a x^b)
  XiDoubleCommutatorEven,
  XiDoubleCommutatorOdd,
  InnerCommutator,           // [s, omega_{1+a}] = omega_{1+s(a)-a}
  InnerWord,
  XiWordEven,
  XiWordOdd,
  ProductFormula,
  InverseFormula,
  LinearConjugationTop,      // s^{-1} s_l s = s_{A l / det A}
  TopLinearProduct,          // n = 2: s_A s_l . s_B s_m = s_{BA} s_{B l / det B + m}
  GroupLaw2,
  GroupLaw3,
  SigmaNotNormal,
  SigmaPrimeNotNormal,
};

struct IdentityName {
  IdentityTag tag;
  const char *name;
};

inline constexpr IdentityName kIdentityNames[] = {
    {IdentityTag::ShiftCommutatorCross, "shift_commutator_cross"},
    {IdentityTag::ShiftCommutatorSameIndex, "shift_commutator_same_index"},
    {IdentityTag::ShiftWordCross, "shift_word_cross"},
    {IdentityTag::ShiftWordSameIndex, "shift_word_same_index"},
    {IdentityTag::XiCommutatorCross, "xi_commutator_cross"},
    {IdentityTag::XiCommutatorTrivial, "xi_commutator_trivial"},
    {IdentityTag::XiCommutatorDiagonal, "xi_commutator_diagonal"},
    {IdentityTag::XiDoubleCommutatorEven, "xi_double_commutator_even"},
    {IdentityTag::XiDoubleCommutatorOdd, "xi_double_commutator_odd"},
    {IdentityTag::InnerCommutator, "inner_commutator"},
    {IdentityTag::InnerWord, "inner_word"},
    {IdentityTag::XiWordEven, "xi_word_even"},
    {IdentityTag::XiWordOdd, "xi_word_odd"},
    {IdentityTag::ProductFormula, "product_formula"},
    {IdentityTag::InverseFormula, "inverse_formula"},
    {IdentityTag::LinearConjugationTop, "linear_conjugation_top"},
    {IdentityTag::TopLinearProduct, "top_linear_product"},
    {IdentityTag::GroupLaw2, "group_law_2"},
    {IdentityTag::GroupLaw3, "group_law_3"},
    {IdentityTag::SigmaNotNormal, "sigma_not_normal"},
    {IdentityTag::SigmaPrimeNotNormal, "sigma_prime_not_normal"},
};

inline std::string to_string(IdentityTag t) {
  for (auto &e : kIdentityNames)
    if (e.tag == t) return e.name;
  return "?";
}

inline IdentityTag parse_identity(const std::string &s) {
  for (auto &e : kIdentityNames)
    if (s == e.name) return e.tag;
  throw ParseError("unknown identity '" + s + "'");
}

// Index sets are ordered lists: x^alpha means the product of the listed generators in order.
struct IdentityParams {
  int n = 0;
  int i = 0, j = 0;
  std::vector<int> alpha{}, beta{}, gamma{};
  std::vector<int> seq{};  // index sequences of the word identities
  long lambda = 1, mu = 1, nu = 1;
  std::uint64_t seed = 0;  // for the identities quantified over random elements
};

// A valid parameter set for each identity.
inline IdentityParams default_params(IdentityTag t) {
  IdentityParams p;
  switch (t) {
    case IdentityTag::ShiftCommutatorCross: p = {.n = 7, .i = 1, .j = 2, .alpha = {3, 4, 5}, .beta = {6, 7}}; p.lambda = 2; p.mu = -3; break;
    case IdentityTag::ShiftCommutatorSameIndex: p = {.n = 6, .i = 1, .j = 0, .alpha = {2, 3}, .beta = {4, 5, 6}}; p.lambda = 3; p.mu = 2; break;
    case IdentityTag::ShiftWordCross: p.n = 7; p.seq = {1, 2, 3, 4, 5, 6, 7}; p.lambda = 2; break;
    case IdentityTag::ShiftWordSameIndex: p.n = 8; p.i = 1; p.seq = {2, 3, 4, 5, 6, 7, 8}; p.lambda = -2; break;
    case IdentityTag::XiCommutatorCross: p = {.n = 7, .i = 1, .j = 2, .alpha = {3, 4}, .beta = {5, 6, 7}}; p.lambda = 2; p.mu = 5; break;
    case IdentityTag::XiCommutatorTrivial: p = {.n = 8, .i = 1, .j = 2, .alpha = {3, 4, 5}, .beta = {6, 7, 8}}; p.lambda = 3; p.mu = -1; break;
    case IdentityTag::XiCommutatorDiagonal: p = {.n = 6, .i = 1, .j = 2, .alpha = {3, 4}, .beta = {5, 6}}; break;
    case IdentityTag::XiDoubleCommutatorEven: p = {.n = 8, .i = 1, .j = 2, .alpha = {3, 4}, .beta = {5, 6}, .gamma = {7, 8}}; p.lambda = 2; p.mu = 3; p.nu = -1; break;
    case IdentityTag::XiDoubleCommutatorOdd: p = {.n = 8, .i = 1, .j = 2, .alpha = {3, 4}, .beta = {5, 6}, .gamma = {3, 7, 8}}; p.lambda = 2; p.mu = -1; p.nu = 3; break;
    case IdentityTag::InnerCommutator: p.n = 5; p.seed = 11; break;
    case IdentityTag::InnerWord: p.n = 7; p.seq = {1, 2, 3, 4, 5, 6, 7}; p.lambda = 3; break;
    case IdentityTag::XiWordEven: p.n = 9; p.i = 1; p.j = 2; p.seq = {3, 4, 5, 6, 7, 8, 9}; p.lambda = 2; break;
    case IdentityTag::XiWordOdd: p.n = 7; p.i = 1; p.j = 2; p.seq = {3, 4, 5, 6, 7}; p.lambda = -3; break;
    case IdentityTag::ProductFormula: p.n = 4; p.seed = 12; break;
    case IdentityTag::InverseFormula: p.n = 5; p.seed = 13; break;
    case IdentityTag::LinearConjugationTop: p.n = 5; p.seed = 14; break;
    case IdentityTag::TopLinearProduct: p.n = 2; p.seed = 15; break;
    case IdentityTag::GroupLaw2: p.n = 2; p.seed = 16; break;
    case IdentityTag::GroupLaw3: p.n = 3; p.seed = 17; break;
    case IdentityTag::SigmaNotNormal: p.n = 5; break;
    case IdentityTag::SigmaPrimeNotNormal: p.n = 6; break;
  }
  return p;
}

namespace detail {

inline Mask checked_set(int n, const std::vector<int> &v, const char *what) {
  Mask m = 0;
  for (int k : v) {
    if (k < 1 || k > n) throw DomainError(std::string(what) + ": index out of range");
    if (has(m, k)) throw DomainError(std::string(what) + ": repeated index");
    m |= bit(k);
  }
  return m;
}

inline void require(bool ok, const std::string &why) {
  if (!ok) throw DomainError("identity parameters: " + why);
}

// Product of the listed generators, in order.
template <Coefficient K>
Element<K> word(int n, std::initializer_list<const std::vector<int> *> parts, K c = K(1)) {
  Element<K> r = Element<K>::constant(n, c);
  for (auto *v : parts)
    for (int k : *v) r = r * Element<K>::generator(n, k);
  return r;
}

template <Coefficient K>
Element<K> word(int n, const std::vector<int> &v, K c = K(1)) {
  return word<K>(n, {&v}, c);
}

inline bool odd_size(const std::vector<int> &v) { return v.size() % 2 == 1; }

template <Coefficient K>
Endomorphism<K> comm(const Endomorphism<K> &a, const Endomorphism<K> &b) {
  return group_commutator(a, b);
}

// omega_{1+a} gamma_b sigma_A with gamma_b(x_i) = b_i.
template <Coefficient K>
struct FullTriple {
  Element<K> a;
  std::vector<Element<K>> b;
  Matrix<K> A;
  Endomorphism<K> map() const { return inner(Element<K>::one(a.n()) + a) * gamma_full(b) * linear(A); }
};

template <Coefficient K>
FullTriple<K> random_triple(int n, Rng &rng) {
  FullTriple<K> t{Element<K>(n), {}, random_invertible_matrix<K>(n, rng)};
  t.a = random_odd<K>(n, rng, 1, 0.4).filter([n](Mask m) { return degree(m) < n; });
  for (int i = 1; i <= n; ++i) t.b.push_back(Element<K>::generator(n, i) + random_odd<K>(n, rng, 3, 0.5));
  return t;
}

template <Coefficient K>
std::vector<Element<K>> mat_times(const Matrix<K> &m, const std::vector<Element<K>> &v) {
  int n = m.n();
  std::vector<Element<K>> r(n, Element<K>(v[0].n()));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!m(i, k).is_zero()) r[i] += m(i, k) * v[k];
  return r;
}

template <Coefficient K>
std::vector<Element<K>> apply_all(const Endomorphism<K> &s, const std::vector<Element<K>> &v) {
  std::vector<Element<K>> r;
  for (auto &e : v) r.push_back(s.apply(e));
  return r;
}

template <Coefficient K>
Element<K> linear_form(int n, const std::vector<K> &l) {
  Element<K> r(n);
  for (int i = 0; i < n; ++i) r += Element<K>::monomial(n, bit(i + 1), l[i]);
  return r;
}

template <Coefficient K>
std::vector<K> random_vector(int n, Rng &rng) {
  std::vector<K> v;
  for (int i = 0; i < n; ++i) v.push_back(random_scalar<K>(rng));
  return v;
}

}  // namespace detail

template <Coefficient K>
bool check_identity(IdentityTag tag, const IdentityParams &p) {
  using namespace detail;
  using E = Element<K>;
  using Endo = Endomorphism<K>;
  int n = p.n;
  check_n(n);
  K l(p.lambda), m(p.mu), v(p.nu);
  std::vector<int> vi{p.i}, vj{p.j};
  auto idx = [&](int k) {
    require(k >= 1 && k <= n, "index out of range");
    return k;
  };
  Rng rng(p.seed);

  switch (tag) {
    case IdentityTag::ShiftCommutatorCross: {
      Mask a = checked_set(n, p.alpha, "alpha"), b = checked_set(n, p.beta, "beta");
      Mask ij = bit(idx(p.i)) | bit(idx(p.j));
      require(p.i != p.j, "i = j");
      require(odd_size(p.alpha) && !odd_size(p.beta) && p.beta.size() >= 2, "alpha odd, beta even of size >= 2");
      require(!(a & b) && !((a | b) & ij), "index sets must be disjoint");
      Endo lhs = comm(shift(p.i, word<K>(n, {&vi, &vj, &p.alpha}, l)), shift(p.j, word<K>(n, {&vj, &p.beta}, m)));
      return lhs == shift(p.i, word<K>(n, {&vi, &vj, &p.beta, &p.alpha}, -l * m));
    }
    case IdentityTag::ShiftCommutatorSameIndex: {
      Mask a = checked_set(n, p.alpha, "alpha"), b = checked_set(n, p.beta, "beta");
      idx(p.i);
      require(!odd_size(p.alpha) && p.alpha.size() >= 2, "alpha even of size >= 2");
      require(odd_size(p.beta) && p.beta.size() >= 3, "beta odd of size >= 3");
      require(!(a & b) && !((a | b) & bit(p.i)), "index sets must be disjoint");
      Endo lhs = comm(shift(p.i, word<K>(n, {&vi, &p.alpha}, l)), shift(p.i, word<K>(n, {&p.beta}, m)));
      return lhs == shift(p.i, word<K>(n, {&p.beta, &p.alpha}, -l * m));
    }
    case IdentityTag::ShiftWordCross: {
      // s_{i1, l x_{i1} x_{i2} ... x_{i2m+3}} as nested commutators peeling pairs from the right
      checked_set(n, p.seq, "seq");
      int len = static_cast<int>(p.seq.size());
      require(len >= 5 && len % 2 == 1, "sequence of odd length >= 5");
      auto x = [&](int k) { return p.seq[k - 1]; };
      int mm = (len - 3) / 2;
      std::vector<int> w0{x(1), x(2), x(len)};
      Endo c = shift(x(1), word<K>(n, w0, l));
      for (int q = mm; q >= 1; --q) {
        std::vector<int> w{x(2), x(2 * q + 1), x(2 * q + 2)};
        c = comm(c, shift(x(2), word<K>(n, w, K(-1))));
      }
      return c == shift(x(1), word<K>(n, p.seq, l));
    }
    case IdentityTag::ShiftWordSameIndex: {
      // s_{i, l x_{i1} x_{i2} x_{i3} (x_{i4} x_{i5}) ...} with i outside the sequence
      checked_set(n, p.seq, "seq");
      idx(p.i);
      for (int k : p.seq) require(k != p.i, "i must not occur in the sequence");
      int len = static_cast<int>(p.seq.size());
      require(len >= 5 && len % 2 == 1, "sequence of odd length >= 5");
      auto x = [&](int k) { return p.seq[k - 1]; };
      int mm = (len - 1) / 2;
      std::vector<int> w0{x(1), x(2), x(3)};
      Endo c = shift(p.i, word<K>(n, w0));
      for (int q = 2; q <= mm; ++q) {
        std::vector<int> w{p.i, x(2 * q), x(2 * q + 1)};
        c = comm(shift(p.i, word<K>(n, w, q == mm ? -l : K(-1))), c);
      }
      return c == shift(p.i, word<K>(n, p.seq, l));
    }
    case IdentityTag::XiCommutatorCross: {
      Mask a = checked_set(n, p.alpha, "alpha"), b = checked_set(n, p.beta, "beta");
      Mask ij = bit(idx(p.i)) | bit(idx(p.j));
      require(p.i != p.j, "i = j");
      require(!odd_size(p.alpha) && p.alpha.size() >= 2, "alpha even of size >= 2");
      require(odd_size(p.beta) && p.beta.size() >= 3, "beta odd of size >= 3");
      require(!(a & b) && !((a | b) & ij), "index sets must be disjoint");
      Endo lhs = comm(shift(p.i, word<K>(n, {&vj, &p.alpha}, l)), shift(p.j, word<K>(n, {&p.beta}, m)));
      return lhs == shift(p.i, word<K>(n, {&p.alpha, &p.beta}, -l * m));
    }
    case IdentityTag::XiCommutatorTrivial: {
      Mask a = checked_set(n, p.alpha, "alpha"), b = checked_set(n, p.beta, "beta");
      Mask ij = bit(idx(p.i)) | bit(idx(p.j));
      require(odd_size(p.alpha) && p.alpha.size() >= 3 && odd_size(p.beta) && p.beta.size() >= 3,
              "alpha, beta odd of size >= 3");
      require(!((a | b) & ij), "alpha, beta must avoid i, j");
      Endo lhs = comm(shift(p.i, word<K>(n, p.alpha, l)), shift(p.j, word<K>(n, p.beta, m)));
      return lhs.is_identity();
    }
    case IdentityTag::XiCommutatorDiagonal:
    case IdentityTag::XiDoubleCommutatorEven:
    case IdentityTag::XiDoubleCommutatorOdd: {
      Mask a = checked_set(n, p.alpha, "alpha"), b = checked_set(n, p.beta, "beta");
      Mask ij = bit(idx(p.i)) | bit(idx(p.j));
      require(p.i != p.j, "i = j");
      require(!odd_size(p.alpha) && !odd_size(p.beta) && !p.alpha.empty() && !p.beta.empty(),
              "alpha, beta even and nonempty");
      require(!(a & b) && !((a | b) & ij), "index sets must be disjoint");
      Endo inner_c = comm(shift(p.i, word<K>(n, {&vj, &p.alpha}, l)), shift(p.j, word<K>(n, {&vi, &p.beta}, m)));
      if (tag == IdentityTag::XiCommutatorDiagonal) {
        E ab = word<K>(n, {&p.alpha, &p.beta}, l * m);
        auto im = Endo::identity(n).images();
        im[p.i - 1] = im[p.i - 1] * (E::one(n) - ab);
        im[p.j - 1] = im[p.j - 1] * (E::one(n) + ab);
        return inner_c == Endo(im) && member(inner_c, GroupId::sigma_prime());
      }
      Mask c = checked_set(n, p.gamma, "gamma");
      require(!((a | b) & c) || tag == IdentityTag::XiDoubleCommutatorOdd, "gamma must avoid alpha, beta");
      require(!(c & ij), "gamma must avoid i, j");
      if (tag == IdentityTag::XiDoubleCommutatorEven) {
        require(!odd_size(p.gamma) && !p.gamma.empty(), "gamma even and nonempty");
        Endo lhs = comm(shift(p.i, word<K>(n, {&vj, &p.gamma}, v)), inner_c);
        return lhs == shift(p.i, word<K>(n, {&vj, &p.alpha, &p.beta, &p.gamma}, K(-2) * l * m * v));
      }
      require(odd_size(p.gamma) && p.gamma.size() >= 3, "gamma odd of size >= 3");
      Endo lhs = comm(shift(p.i, word<K>(n, p.gamma, v)), inner_c);
      return lhs == shift(p.i, word<K>(n, {&p.alpha, &p.beta, &p.gamma}, -l * m * v));
    }
    case IdentityTag::InnerCommutator: {
      bool ok = true;
      for (int t = 0; t < 5 && ok; ++t) {
        // s must preserve parity so that s(a) stays odd
        Endo s = random_gamma<K>(n, rng, 0.4) * linear(random_invertible_matrix<K>(n, rng));
        E a = random_odd<K>(n, rng, 1, 0.4);
        Endo lhs = comm(s, inner(E::one(n) + a));
        ok = lhs == inner(E::one(n) + s.apply(a) - a);
      }
      return ok;
    }
    case IdentityTag::InnerWord: {
      checked_set(n, p.seq, "seq");
      int len = static_cast<int>(p.seq.size());
      require(len >= 3 && len % 2 == 1, "sequence of odd length >= 3");
      auto x = [&](int k) { return p.seq[k - 1]; };
      int mm = (len - 1) / 2;
      std::vector<int> first{x(1)};
      Endo c = inner(E::one(n) + word<K>(n, first, l));
      for (int q = mm; q >= 1; --q) {
        std::vector<int> w{x(1), x(2 * q), x(2 * q + 1)};
        c = comm(shift(x(1), word<K>(n, w)), c);
      }
      return c == inner(E::one(n) + word<K>(n, p.seq, l));
    }
    case IdentityTag::XiWordEven:
    case IdentityTag::XiWordOdd: {
      // seq = k1 l1 k2 l2 ... followed by p q r
      Mask ij = bit(idx(p.i)) | bit(idx(p.j));
      require(p.i != p.j, "i = j");
      int len = static_cast<int>(p.seq.size());
      require(len >= 3 && len % 2 == 1, "pairs followed by three indices");
      checked_set(n, p.seq, "seq");
      int pairs = (len - 3) / 2;
      require((pairs % 2 == 0) == (tag == IdentityTag::XiWordEven),
              tag == IdentityTag::XiWordEven ? "an even number of pairs" : "an odd number of pairs");
      std::vector<int> pqr(p.seq.end() - 3, p.seq.end());
      std::vector<int> all_pairs(p.seq.begin(), p.seq.end() - 3);
      Mask pm = checked_set(n, pqr, "p,q,r");
      for (int t = 0; t < pairs; ++t) {
        std::vector<int> pr{p.seq[2 * t], p.seq[2 * t + 1]};
        require(!(checked_set(n, pr, "pair") & (ij | pm)), "pairs must avoid i, j, p, q, r");
      }
      require(!(pm & ij), "p, q, r must avoid i, j");
      Endo c = tag == IdentityTag::XiWordEven ? shift(p.i, word<K>(n, pqr, l)) : shift(p.j, word<K>(n, pqr, -l));
      for (int t = pairs; t >= 1; --t) {
        std::vector<int> pr{p.seq[2 * t - 2], p.seq[2 * t - 1]};
        Endo f = t % 2 ? shift(p.i, word<K>(n, {&vj, &pr})) : shift(p.j, word<K>(n, {&vi, &pr}));
        c = comm(f, c);
      }
      return c == shift(p.i, word<K>(n, {&all_pairs, &pqr}, l));
    }
    case IdentityTag::ProductFormula: {
      bool ok = true;
      for (int t = 0; t < 3 && ok; ++t) {
        auto f = random_triple<K>(n, rng), g = random_triple<K>(n, rng);
        Endo gs = gamma_full(f.b) * linear(f.A);
        E a = f.a + gs.apply(g.a);
        auto c = mat_times(f.A.inverse(), apply_all(linear(f.A), g.b));
        std::vector<E> cb;
        for (auto &e : c) cb.push_back(substitute(f.b, e));
        Endo rhs = inner(E::one(n) + a) * gamma_full(cb) * linear(g.A * f.A);
        ok = f.map() * g.map() == rhs;
      }
      return ok;
    }
    case IdentityTag::InverseFormula: {
      bool ok = true;
      for (int t = 0; t < 3 && ok; ++t) {
        auto f = random_triple<K>(n, rng);
        Endo ginv = inverse(gamma_full(f.b));
        std::vector<E> bp = ginv.images();
        Matrix<K> ai = f.A.inverse();
        E a2 = -(linear(ai) * gamma_full(bp)).apply(f.a);
        auto b2 = mat_times(f.A, apply_all(linear(ai), bp));
        Endo rhs = inner(E::one(n) + a2) * gamma_full(b2) * linear(ai);
        ok = inverse(f.map()) == rhs;
      }
      return ok;
    }
    case IdentityTag::LinearConjugationTop: {
      bool ok = true;
      for (int t = 0; t < 3 && ok; ++t) {
        Endo s = random_automorphism<K>(n, rng, 0.4);
        auto lam = random_vector<K>(n, rng);
        Matrix<K> A = s.linear_part();
        auto al = A.apply(lam);
        K d = A.det().inv();
        for (auto &c : al) c *= d;
        ok = inverse(s) * top_shift(n, lam) * s == top_shift(n, al);
      }
      return ok;
    }
    case IdentityTag::TopLinearProduct: {
      require(n == 2, "n = 2");
      bool ok = true;
      for (int t = 0; t < 5 && ok; ++t) {
        Matrix<K> A = random_invertible_matrix<K>(2, rng), B = random_invertible_matrix<K>(2, rng);
        auto lam = random_vector<K>(2, rng), mu = random_vector<K>(2, rng);
        auto bl = B.apply(lam);
        K d = B.det().inv();
        for (int k = 0; k < 2; ++k) bl[k] = bl[k] * d + mu[k];
        ok = linear(A) * top_shift(2, lam) * linear(B) * top_shift(2, mu) == linear(B * A) * top_shift(2, bl);
      }
      return ok;
    }
    case IdentityTag::GroupLaw2:
    case IdentityTag::GroupLaw3: {
      // (l, A) <-> omega_{1+l.x} sigma_A; for n = 3 also (l, m, A) <-> omega_{1+l.x} (x + m theta) sigma_A
      bool three = tag == IdentityTag::GroupLaw3;
      require(n == (three ? 3 : 2), three ? "n = 3" : "n = 2");
      auto make = [&](const std::vector<K> &lam, const std::vector<K> &mu, const Matrix<K> &A) {
        Endo r = inner(E::one(n) + linear_form(n, lam));
        if (three) r = r * top_shift(n, mu);
        return r * linear(A);
      };
      bool ok = true;
      for (int t = 0; t < 5 && ok; ++t) {
        Matrix<K> A = random_invertible_matrix<K>(n, rng), A2 = random_invertible_matrix<K>(n, rng);
        auto l1 = random_vector<K>(n, rng), l2 = random_vector<K>(n, rng);
        auto m1 = random_vector<K>(n, rng), m2 = random_vector<K>(n, rng);
        auto lp = A.transpose().apply(l2);
        for (int k = 0; k < n; ++k) lp[k] += l1[k];
        auto mp = A.inverse().apply(m2);
        for (int k = 0; k < n; ++k) mp[k] = m1[k] + A.det() * mp[k];
        ok = make(l1, m1, A) * make(l2, m2, A2) == make(lp, mp, A2 * A);
        // inverse: (-(A^t)^{-1} l, -det(A^{-1}) A m, A^{-1})
        auto li = A.transpose().inverse().apply(l1);
        auto mi = A.apply(m1);
        for (int k = 0; k < n; ++k) {
          li[k] = -li[k];
          mi[k] = -A.det().inv() * mi[k];
        }
        ok = ok && inverse(make(l1, m1, A)) == make(li, mi, A.inverse());
      }
      return ok;
    }
    case IdentityTag::SigmaNotNormal: {
      require(n >= 5, "n >= 5");
      auto im = Endo::identity(n).images();
      im[0] = im[0] * (E::one(n) + E::monomial(n, mask_of({2, 3})));
      Endo s(im);
      Endo t = shift(2, E::monomial(n, mask_of({1, 4, 5})));
      E js = jacobian(s).det;
      return member(s, GroupId::gamma()) && member(t, GroupId::sigma()) && js == E::one(n) + E::monomial(n, mask_of({2, 3})) &&
             !(t.apply(js) == js) && !member(s * t * inverse(s), GroupId::sigma());
    }
    case IdentityTag::SigmaPrimeNotNormal: {
      require(n >= 6, "n >= 6");
      Endo s = shift(1, E::monomial(n, mask_of({2, 3, 4})));
      Endo t = rho(n, 1, 2, mask_of({5, 6}), K(1));
      Endo c = s * t * inverse(s);
      return member(s, GroupId::sigma()) && member(t, GroupId::sigma_prime()) && member(c, GroupId::sigma()) &&
             !member(c, GroupId::sigma_prime());
    }
  }
  return false;
}

}  // namespace grassmann
