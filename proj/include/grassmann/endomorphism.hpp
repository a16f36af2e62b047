#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grassmann/element.hpp"
#include "grassmann/matrix.hpp"
#include "grassmann/skew.hpp"

namespace grassmann {

// Substitutes images[i-1] for x_i in e: x^alpha goes to the product of the
// images in ascending index order. The images need not be consistent.
template <Coefficient K>
Element<K> substitute(const std::vector<Element<K>> &images, const Element<K> &e) {
  int n = e.n();
  if (static_cast<int>(images.size()) != n) throw DimensionError("image count does not match n");
  std::unordered_map<Mask, Element<K>> cache;
  cache.emplace(0, Element<K>::one(n));
  auto product = [&](auto &self, Mask m) -> const Element<K> & {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    int top = 31 - std::countl_zero(m);
    Element<K> p = self(self, m & ~(Mask(1) << top)) * images[top];
    return cache.emplace(m, std::move(p)).first->second;
  };
  Element<K> r(n);
  for (auto &[m, c] : e.terms()) {
    const Element<K> &p = product(product, m);
    if (!p.is_zero()) r += c * p;
  }
  return r;
}

// An endomorphism of the Grassmann algebra, given by the images of x_1..x_n.
template <Coefficient K>
class Endomorphism {
public:
  using E = Element<K>;

  Endomorphism() = default;

  // Checks that the images square to zero and pairwise anticommute.
  explicit Endomorphism(std::vector<E> images) : images_(std::move(images)) {
    check_shape();
    int n = this->n();
    for (int i = 0; i < n; ++i) {
      if (!(images_[i] * images_[i]).is_zero())
        throw NotWellDefinedError("image of x" + std::to_string(i + 1) + " does not square to zero");
      for (int j = i + 1; j < n; ++j)
        if (!(images_[i] * images_[j] + images_[j] * images_[i]).is_zero())
          throw NotWellDefinedError("images of x" + std::to_string(i + 1) + " and x" + std::to_string(j + 1) +
                                    " do not anticommute");
    }
  }

  // For images already known to be consistent, e.g. results of composition.
  static Endomorphism trusted(std::vector<E> images) {
    Endomorphism s;
    s.images_ = std::move(images);
    s.check_shape();
    return s;
  }

  static Endomorphism identity(int n) {
    std::vector<E> im;
    for (int i = 1; i <= n; ++i) im.push_back(E::generator(n, i));
    return trusted(std::move(im));
  }

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<E> &images() const { return images_; }
  const E &image(int i) const { return images_.at(i - 1); }

  E apply(const E &e) const {
    if (e.n() != n()) throw DimensionError("element and endomorphism sizes differ");
    return substitute(images_, e);
  }
  E operator()(const E &e) const { return apply(e); }

  // Degree-one coefficient matrix: sigma(x_i) = sum_j a_ij x_j + ...
  Matrix<K> linear_part() const {
    Matrix<K> a(n());
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j) a(i, j) = images_[i].coeff(bit(j + 1));
    return a;
  }

  bool has_odd_images() const {
    for (auto &im : images_)
      if (!im.is_odd()) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(n()); }

  friend bool operator==(const Endomorphism &a, const Endomorphism &b) { return a.images_ == b.images_; }

private:
  void check_shape() const {
    int n = this->n();
    check_n(n);
    for (auto &im : images_)
      if (im.n() != n) throw DimensionError("image lives in a different algebra");
  }

  std::vector<E> images_;
};

// (sigma tau)(x_i) = sigma(tau(x_i)).
template <Coefficient K>
Endomorphism<K> compose(const Endomorphism<K> &s, const Endomorphism<K> &t) {
  if (s.n() != t.n()) throw DimensionError("composition of endomorphisms of different sizes");
  std::vector<Element<K>> im;
  im.reserve(s.n());
  for (auto &x : t.images()) im.push_back(s.apply(x));
  return Endomorphism<K>::trusted(std::move(im));
}

template <Coefficient K>
Endomorphism<K> operator*(const Endomorphism<K> &s, const Endomorphism<K> &t) {
  return compose(s, t);
}

template <Coefficient K>
bool is_automorphism(const Endomorphism<K> &s) {
  return s.linear_part().det().is_unit();
}

// ---------------------------------------------------------------------------
// Jacobian

template <Coefficient K>
using ElementMatrix = std::vector<std::vector<Element<K>>>;

template <Coefficient K>
struct JacobianData {
  ElementMatrix<K> matrix;
  Element<K> det;
  int valuation = 0;
};

inline int valuation_cap(int n) { return 2 * (n / 2) + 2; }

// Largest 2m with e - e(0) in m^{2m}; the cap when e is a scalar.
template <Coefficient K>
int valuation(const Element<K> &e) {
  Element<K> rest = e - Element<K>::constant(e.n(), e.constant_term());
  if (rest.is_zero()) return valuation_cap(e.n());
  int d = rest.min_degree();
  return d - d % 2;
}

// Determinant of a matrix with central entries, by expansion along rows
// over column subsets. rows/cols select a square submatrix.
template <Coefficient K>
Element<K> central_det(const ElementMatrix<K> &m, const std::vector<int> &rows, const std::vector<int> &cols,
                       int n) {
  std::size_t k = rows.size();
  if (k == 0) return Element<K>::one(n);
  std::vector<Element<K>> d(std::size_t(1) << k, Element<K>(n));
  d[0] = Element<K>::one(n);
  for (Mask s = 1; s < (Mask(1) << k); ++s) {
    int r = std::popcount(s) - 1;
    Element<K> acc(n);
    for (std::size_t j = 0; j < k; ++j) {
      if (!((s >> j) & 1u)) continue;
      const Element<K> &prev = d[s & ~(Mask(1) << j)];
      const Element<K> &a = m[rows[r]][cols[j]];
      if (prev.is_zero() || a.is_zero()) continue;
      Element<K> t = a * prev;
      if (std::popcount(s >> (j + 1)) & 1) acc -= t;
      else acc += t;
    }
    d[s] = std::move(acc);
  }
  return d.back();
}

template <Coefficient K>
ElementMatrix<K> jacobian_matrix(const Endomorphism<K> &s) {
  int n = s.n();
  for (int i = 1; i <= n; ++i)
    if (!s.image(i).is_odd())
      throw ParityError("image of x" + std::to_string(i) + " is not odd; the Jacobian is defined for odd images");
  ElementMatrix<K> m(n, std::vector<Element<K>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = skew_partial(j + 1, s.image(i + 1));
  return m;
}

template <Coefficient K>
JacobianData<K> jacobian(const Endomorphism<K> &s) {
  JacobianData<K> j;
  j.matrix = jacobian_matrix(s);
  std::vector<int> all(s.n());
  for (int i = 0; i < s.n(); ++i) all[i] = i;
  j.det = central_det(j.matrix, all, all, s.n());
  j.valuation = valuation(j.det);
  return j;
}

template <Coefficient K>
Element<K> jacobian_det(const Endomorphism<K> &s) {
  return jacobian(s).det;
}

// Dual skew derivatives d'_i = J^{-1} sum_j (-1)^{i+j} M_ij d_j, where M_ij
// is the minor of the Jacobian matrix without row i and column j.
template <Coefficient K>
class DualDerivatives {
public:
  explicit DualDerivatives(const Endomorphism<K> &s) : sigma_(s), n_(s.n()) {
    auto jd = jacobian(s);
    if (!jd.det.constant_term().is_unit())
      throw NotInvertibleError("Jacobian determinant " + to_string(jd.det) + " is not a unit");
    Element<K> jinv = invert_unit(jd.det);
    coef_.assign(n_, std::vector<Element<K>>(n_));
    for (int i = 0; i < n_; ++i) {
      std::vector<int> rows;
      for (int r = 0; r < n_; ++r)
        if (r != i) rows.push_back(r);
      for (int j = 0; j < n_; ++j) {
        std::vector<int> cols;
        for (int c = 0; c < n_; ++c)
          if (c != j) cols.push_back(c);
        Element<K> minor = central_det(jd.matrix, rows, cols, n_);
        coef_[i][j] = ((i + j) % 2 ? -jinv : jinv) * minor;
      }
    }
  }

  Element<K> operator()(int i, const Element<K> &e) const {
    check_index(n_, i);
    Element<K> r(n_);
    for (int j = 0; j < n_; ++j) {
      if (coef_[i - 1][j].is_zero()) continue;
      Element<K> d = skew_partial(j + 1, e);
      if (!d.is_zero()) r += coef_[i - 1][j] * d;
    }
    return r;
  }

  // (1 - sigma(x_n) d'_n) ... (1 - sigma(x_1) d'_1), read off as a scalar.
  // The operator is linear, so it is evaluated once per monomial and cached.
  K projection(const Element<K> &e) const {
    if (basis_.empty()) basis_.resize(std::size_t(1) << n_);
    K sum(0);
    for (auto &[m, c] : e.terms()) {
      auto &b = basis_[m];
      if (!b) b = project_monomial(m);
      if (!b->is_zero()) sum += c * *b;
    }
    return sum;
  }

  const std::vector<std::vector<Element<K>>> &coefficients() const { return coef_; }

private:
  K project_monomial(Mask m) const {
    Element<K> r = Element<K>::monomial(n_, m);
    for (int i = 1; i <= n_; ++i) {
      if (r.is_zero()) break;
      r -= sigma_.image(i) * (*this)(i, r);
    }
    if (!r.is_constant()) throw InternalError("dual projection left a non-scalar " + to_string(r));
    return r.constant_term();
  }

  Endomorphism<K> sigma_;
  int n_;
  std::vector<std::vector<Element<K>>> coef_;
  mutable std::vector<std::optional<K>> basis_;
};

template <Coefficient K>
Element<K> skew_partial_prime(const Endomorphism<K> &s, int i, const Element<K> &e) {
  return DualDerivatives<K>(s)(i, e);
}

// ---------------------------------------------------------------------------
// Inversion

enum class InverseStrategy { Formula, Iteration };

// sigma^{-1}(x_j) = sum over alpha of phi_sigma(d'^alpha(x_j)) x^alpha.
template <Coefficient K>
Endomorphism<K> inverse_by_formula(const Endomorphism<K> &s) {
  int n = s.n();
  if (!s.has_odd_images()) throw ParityError("the inversion formula needs odd images");
  if (!is_automorphism(s)) throw NotInvertibleError("linear part is singular");
  DualDerivatives<K> dual(s);
  std::vector<Element<K>> im;
  for (int j = 1; j <= n; ++j) {
    std::vector<Element<K>> d(std::size_t(1) << n, Element<K>(n));
    d[0] = Element<K>::generator(n, j);
    std::vector<typename Element<K>::Term> terms;
    for (Mask a = 0; a < d.size(); ++a) {
      if (a) {
        int top = 31 - std::countl_zero(a);
        const Element<K> &prev = d[a & ~(Mask(1) << top)];
        if (prev.is_zero()) continue;
        d[a] = dual(top + 1, prev);
      }
      if (d[a].is_zero()) continue;
      K c = dual.projection(d[a]);
      if (!c.is_zero()) terms.emplace_back(a, c);
    }
    im.push_back(Element<K>::from_terms(n, std::move(terms)));
  }
  return Endomorphism<K>::trusted(std::move(im));
}

// Writes sigma(x) = A x + h(x) with h in m^2 and resubstitutes
// y <- A^{-1}(x - h(y)) from y = A^{-1} x until it stabilises.
template <Coefficient K>
Endomorphism<K> inverse_by_iteration(const Endomorphism<K> &s) {
  int n = s.n();
  Matrix<K> a = s.linear_part();
  if (!a.det().is_unit()) throw NotInvertibleError("linear part is singular");
  for (int i = 1; i <= n; ++i)
    if (!s.image(i).constant_term().is_zero()) throw NotInvertibleError("image with a constant term");
  Matrix<K> ainv = a.inverse();
  std::vector<Element<K>> h(n, Element<K>(n));
  for (int i = 0; i < n; ++i) h[i] = s.image(i + 1).degrees_at_least(2);
  auto mix = [&](const std::vector<Element<K>> &v) {
    std::vector<Element<K>> r(n, Element<K>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (!ainv(i, k).is_zero()) r[i] += ainv(i, k) * v[k];
    return r;
  };
  std::vector<Element<K>> x(n, Element<K>(n));
  for (int i = 0; i < n; ++i) x[i] = Element<K>::generator(n, i + 1);
  std::vector<Element<K>> y = mix(x);
  bool stable = false;
  for (int step = 0; step < n + 1 && !stable; ++step) {
    std::vector<Element<K>> rhs(n, Element<K>(n));
    for (int k = 0; k < n; ++k) rhs[k] = x[k] - substitute(y, h[k]);
    std::vector<Element<K>> next = mix(rhs);
    stable = next == y;
    y = std::move(next);
  }
  if (!stable) throw InternalError("inverse iteration did not stabilise");
  return Endomorphism<K>::trusted(std::move(y));
}

template <Coefficient K>
Endomorphism<K> inverse(const Endomorphism<K> &s, InverseStrategy how = InverseStrategy::Iteration) {
  return how == InverseStrategy::Formula ? inverse_by_formula(s) : inverse_by_iteration(s);
}

// Group commutator [s, t] = s t s^{-1} t^{-1}.
template <Coefficient K>
Endomorphism<K> group_commutator(const Endomorphism<K> &s, const Endomorphism<K> &t) {
  return s * t * inverse(s) * inverse(t);
}

// ---------------------------------------------------------------------------
// Builders

// omega_u(e) = u e u^{-1}
template <Coefficient K>
Endomorphism<K> inner(const Element<K> &u) {
  Element<K> ui = invert_unit(u);
  std::vector<Element<K>> im;
  for (int i = 1; i <= u.n(); ++i) im.push_back(u * Element<K>::generator(u.n(), i) * ui);
  return Endomorphism<K>::trusted(std::move(im));
}

// sigma_A(x_i) = sum_j a_ij x_j
template <Coefficient K>
Endomorphism<K> linear(const Matrix<K> &a) {
  int n = a.n();
  std::vector<Element<K>> im;
  for (int i = 0; i < n; ++i) {
    std::vector<typename Element<K>::Term> t;
    for (int j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) t.emplace_back(bit(j + 1), a(i, j));
    im.push_back(Element<K>::from_terms(n, std::move(t)));
  }
  return Endomorphism<K>::trusted(std::move(im));
}

// x_i -> x_i + b, other generators fixed.
template <Coefficient K>
Endomorphism<K> shift(int i, const Element<K> &b) {
  auto im = Endomorphism<K>::identity(b.n()).images();
  check_index(b.n(), i);
  im[i - 1] += b;
  return Endomorphism<K>(std::move(im));
}

// x_i -> x_i + b_i for all i.
template <Coefficient K>
Endomorphism<K> gamma_shift(const std::vector<Element<K>> &b) {
  int n = static_cast<int>(b.size());
  auto im = Endomorphism<K>::identity(n).images();
  for (int i = 0; i < n; ++i) im[i] += b[i];
  return Endomorphism<K>(std::move(im));
}

// x_i -> b_i for all i.
template <Coefficient K>
Endomorphism<K> gamma_full(const std::vector<Element<K>> &b) {
  return Endomorphism<K>(b);
}

// x_i -> x_i (1 + c x^alpha), x_j -> x_j (1 - c x^alpha).
template <Coefficient K>
Endomorphism<K> rho(int n, int i, int j, Mask alpha, const K &c) {
  auto im = Endomorphism<K>::identity(n).images();
  Element<K> m = Element<K>::monomial(n, alpha, c);
  im[i - 1] += im[i - 1] * m;
  im[j - 1] -= im[j - 1] * m;
  return Endomorphism<K>(std::move(im));
}

// x_i -> x_i + lambda_i x_1...x_n
template <Coefficient K>
Endomorphism<K> top_shift(int n, const std::vector<K> &lambda) {
  std::vector<Element<K>> b;
  for (int i = 0; i < n; ++i) b.push_back(Element<K>::monomial(n, full_mask(n), lambda[i]));
  return gamma_shift(b);
}

// ---------------------------------------------------------------------------
// Text form: one "x<i> -> <expr>" per generator, separated by newlines or ';'.

template <Coefficient K>
std::string to_string(const Endomorphism<K> &s) {
  std::string out;
  for (int i = 1; i <= s.n(); ++i) out += (i > 1 ? "\n" : "") + ("x" + std::to_string(i) + " -> ") + to_string(s.image(i));
  return out;
}

// Generators that are not mentioned map to themselves.
template <Coefficient K>
Endomorphism<K> parse_endomorphism(int n, std::string_view text) {
  auto im = Endomorphism<K>::identity(n).images();
  std::vector<bool> seen(n, false);
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find_first_of(";\n", start);
    if (end == std::string::npos) end = s.size();
    std::string line = s.substr(start, end - start);
    start = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'x<i> -> <expr>' in '" + line + "'");
    std::string lhs;
    for (char c : line.substr(0, arrow))
      if (!std::isspace(static_cast<unsigned char>(c))) lhs += c;
    if (lhs.size() < 2 || lhs[0] != 'x' || lhs.find_first_not_of("0123456789", 1) != std::string::npos)
      throw ParseError("bad generator '" + lhs + "'");
    int i = std::stoi(lhs.substr(1));
    if (i < 1 || i > n) throw ParseError("generator " + lhs + " outside 1.." + std::to_string(n));
    if (seen[i - 1]) throw ParseError("generator " + lhs + " assigned twice");
    seen[i - 1] = true;
    im[i - 1] = parse_element<K>(n, line.substr(arrow + 2));
  }
  return Endomorphism<K>(std::move(im));
}

}  // namespace grassmann
