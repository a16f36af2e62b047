#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grassmann/coefficient.hpp"
#include "grassmann/error.hpp"

namespace grassmann {

// Dense square matrix over a coefficient field, row-major.
template <Coefficient K>
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(std::size_t(n) * n, K(0)) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int n() const { return n_; }
  K &operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const K &operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

  friend Matrix operator*(const Matrix &x, const Matrix &y) {
    if (x.n_ != y.n_) throw DimensionError("matrix size mismatch");
    Matrix r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (int j = 0; j < x.n_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix &x, const Matrix &y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  Matrix transpose() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<K> apply(const std::vector<K> &v) const {
    std::vector<K> r(n_, K(0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  K det() const {
    Matrix m = *this;
    K d(1);
    for (int c = 0; c < n_; ++c) {
      int p = c;
      while (p < n_ && m(p, c).is_zero()) ++p;
      if (p == n_) return K(0);
      if (p != c) {
        for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      K inv = m(c, c).inv();
      for (int r = c + 1; r < n_; ++r) {
        if (m(r, c).is_zero()) continue;
        K f = m(r, c) * inv;
        for (int j = c; j < n_; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return d;
  }

  Matrix inverse() const {
    Matrix m = *this, r = identity(n_);
    for (int c = 0; c < n_; ++c) {
      int p = c;
      while (p < n_ && m(p, c).is_zero()) ++p;
      if (p == n_) throw NotInvertibleError("singular linear part");
      if (p != c)
        for (int j = 0; j < n_; ++j) {
          std::swap(m(p, j), m(c, j));
          std::swap(r(p, j), r(c, j));
        }
      K inv = m(c, c).inv();
      for (int j = 0; j < n_; ++j) {
        m(c, j) *= inv;
        r(c, j) *= inv;
      }
      for (int i = 0; i < n_; ++i) {
        if (i == c || m(i, c).is_zero()) continue;
        K f = m(i, c);
        for (int j = 0; j < n_; ++j) {
          m(i, j) -= f * m(c, j);
          r(i, j) -= f * r(c, j);
        }
      }
    }
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

private:
  int n_ = 0;
  std::vector<K> a_;
};

}  // namespace grassmann
