#pragma once

#include "jetdiff/rational.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace jetdiff {

/// Dense row-major matrix over an arbitrary commutative ring.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting. Every
/// division is exact, so intermediate entries stay as small as the minors.
inline Rational determinant_bareiss(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw ParameterError("determinant of a non-square matrix");
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m(p, p) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && m(swap_row, p) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(p, p) - m(i, p) * m(p, j)) / prev;
      }
      m(i, p) = 0;
    }
    prev = m(p, p);
  }
  return sign > 0 ? m(n - 1, n - 1) : Rational(-m(n - 1, n - 1));
}

/// Leibniz expansion over all permutations. Needs only ring operations, so
/// it works for polynomial and jet entries; cost is n! products.
template <class T>
T determinant_leibniz(const Matrix<T>& m, const T& zero) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw ParameterError("determinant of a non-square matrix");
  if (n == 0) throw ParameterError("determinant of an empty matrix");
  if (n > 8) throw ResourceLimit("Leibniz determinant limited to size 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    T prod = m(0, perm[0]);
    for (std::size_t i = 1; i < n; ++i) prod = prod * m(i, perm[i]);
    if (inversions % 2 == 0) {
      total = total + prod;
    } else {
      total = total - prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Exact rank by row reduction over Q.
inline std::size_t rank(Matrix<Rational> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace jetdiff
