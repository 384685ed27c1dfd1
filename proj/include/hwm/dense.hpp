/*
   Copyright 2026 The hwm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cassert>
#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "hwm/field.hpp"

namespace hwm {

/// Commutative ring scalars usable by the dense routines below. Zero and one
/// are obtained from an existing element because field elements carry their
/// context.
template <class T>
concept RingElement = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { zero_like(a) } -> std::convertible_to<T>;
  { one_like(a) } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

inline FieldElement zero_like(const FieldElement& x) { return x.ctx()->zero(); }
inline FieldElement one_like(const FieldElement& x) { return x.ctx()->one(); }
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

/// Dense row-major matrix over a ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <RingElement T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.cols() == b.rows() && a.cols() > 0);
  Matrix<T> c(a.rows(), b.cols(), zero_like(a(0, 0)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      c(i, j) = std::move(acc);
    }
  return c;
}

template <RingElement T>
Matrix<T> identity_like(const T& sample, std::size_t n) {
  Matrix<T> m(n, n, zero_like(sample));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(sample);
  return m;
}

template <class T, class F>
auto map_entries(const Matrix<T>& m, F&& f) -> Matrix<decltype(f(m(0, 0)))> {
  using U = decltype(f(m(0, 0)));
  if (m.rows() == 0 || m.cols() == 0) return Matrix<U>{};
  Matrix<U> out(m.rows(), m.cols(), f(m(0, 0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

/// Univariate polynomial with ring coefficients, low degree first. The
/// coefficient vector is never empty so zero/one can always be formed.
template <RingElement T>
class UPoly {
 public:
  explicit UPoly(T constant) : c_{std::move(constant)} {}
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    assert(!c_.empty());
    normalize();
  }

  const std::vector<T>& coeffs() const noexcept { return c_; }
  std::size_t degree() const noexcept { return c_.size() - 1; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_like(c_[0]); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> r = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& s = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (const auto& x : a.c_) r.push_back(-x);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  friend UPoly zero_like(const UPoly& a) { return UPoly(zero_like(a.c_[0])); }
  friend UPoly one_like(const UPoly& a) { return UPoly(one_like(a.c_[0])); }
  friend bool is_zero(const UPoly& a) { return a.c_.size() == 1 && is_zero(a.c_[0]); }

 private:
  void normalize() {
    while (c_.size() > 1 && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Determinant by Laplace expansion along the first row. Exponential in the
/// dimension; callers keep it to small matrices.
template <RingElement T>
T det_cofactor(const Matrix<T>& m) {
  assert(m.square() && m.rows() > 0);
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T acc = zero_like(m(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    if (is_zero(m(0, col))) continue;
    Matrix<T> minor(n - 1, n - 1, m(0, 0));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    T term = m(0, col) * det_cofactor(minor);
    acc = (col % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Coefficients e_0..e_n (low degree first) of det(I - tM), computed with
/// Berkowitz's division-free recursion.
template <RingElement T>
std::vector<T> berkowitz_rev_charpoly(const Matrix<T>& m) {
  assert(m.square() && m.rows() > 0);
  const std::size_t n = m.rows();
  const T zero = zero_like(m(0, 0));
  const T one = one_like(m(0, 0));
  // vec holds det(tI - M_r) coefficients, leading coefficient first.
  std::vector<T> vec{one, -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Column r above the diagonal, row r left of the diagonal.
    std::vector<T> col(r, zero);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    std::vector<T> toeplitz{one, -m(r, r)};
    std::vector<T> power = col;  // A_r^k * col
    for (std::size_t k = 0; k < r; ++k) {
      T dot = zero;
      for (std::size_t j = 0; j < r; ++j) dot = dot + m(r, j) * power[j];
      toeplitz.push_back(-dot);
      if (k + 1 < r) {
        std::vector<T> next(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] = next[i] + m(i, j) * power[j];
        power = std::move(next);
      }
    }
    // New vector (length r + 2) = lower-triangular Toeplitz(toeplitz) * vec.
    std::vector<T> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < vec.size(); ++j) next[i] = next[i] + toeplitz[i - j] * vec[j];
    vec = std::move(next);
  }
  return vec;
}

/// Determinant over a field by Gaussian elimination.
inline FieldElement det_gauss(Matrix<FieldElement> m) {
  assert(m.square() && m.rows() > 0);
  const std::size_t n = m.rows();
  FieldElement det = one_like(m(0, 0));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return zero_like(det);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const FieldElement inv = inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const FieldElement f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace hwm
