#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bsf {

// Dense square/rectangular matrix over any exact coefficient type (Rational,
// Cyclotomic). Nothing numeric happens here beyond what T itself provides.
template <class T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        const T& x = at(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& v : r.a) v *= s;
    return r;
  }
};

// Fraction-free (Bareiss) elimination. Divisions are exact at every step, so
// intermediate entries stay in the subring generated by the inputs and never
// accumulate spurious denominators.
template <class T>
T determinant(Matrix<T> m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return T(1);
  const T zero = T(0);
  T prev = T(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m.at(piv, k) == zero) ++piv;
    if (piv == n) return zero;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  T det = m.at(n - 1, n - 1);
  if (negate) det = zero - det;
  return det;
}

// Solves A x = b exactly by Gauss-Jordan elimination; A may be rectangular
// with full column rank. Throws if the system is inconsistent or
// underdetermined.
template <class T>
std::vector<T> solve_exact(Matrix<T> A, std::vector<T> b) {
  if (A.rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
  const T zero = T(0);
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_of_col(A.cols, SIZE_MAX);
  for (std::size_t col = 0; col < A.cols && rank < A.rows; ++col) {
    std::size_t piv = rank;
    while (piv < A.rows && A.at(piv, col) == zero) ++piv;
    if (piv == A.rows) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(rank, j));
      std::swap(b[piv], b[rank]);
    }
    const T inv = T(1) / A.at(rank, col);
    for (std::size_t j = 0; j < A.cols; ++j) A.at(rank, j) *= inv;
    b[rank] *= inv;
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == rank) continue;
      const T f = A.at(i, col);
      if (f == zero) continue;
      for (std::size_t j = 0; j < A.cols; ++j) A.at(i, j) -= f * A.at(rank, j);
      b[i] -= f * b[rank];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (std::size_t col = 0; col < A.cols; ++col)
    if (pivot_of_col[col] == SIZE_MAX) throw std::domain_error("solve: underdetermined system");
  for (std::size_t i = rank; i < A.rows; ++i)
    if (!(b[i] == zero)) throw std::domain_error("solve: inconsistent system");
  std::vector<T> x(A.cols);
  for (std::size_t col = 0; col < A.cols; ++col) x[col] = b[pivot_of_col[col]];
  return x;
}

}  // namespace bsf
