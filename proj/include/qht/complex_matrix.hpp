// ============================================================================
// complex_matrix.hpp — dense complex matrices, row-major
// ============================================================================
//
// Minimal dense-matrix layer used by everything else: storage, arithmetic,
// products, Kronecker products, and the handful of norms the validation
// tolerances are written against.  Dimensions stay desk-scale (<= 4096), so
// everything is straightforward O(n^3)-or-better dense code with no clever
// blocking.
// ============================================================================

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qht/errors.hpp"

namespace qht {

using cplx = std::complex<double>;

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> a;  // row-major, a[i * cols + j]

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const cplx& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Matrix identity(int d) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }
  static Matrix zero(int d) { return Matrix(d, d); }

  bool square() const { return rows == cols; }
};

inline Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw ArgumentError("matrix addition: shape mismatch");
  Matrix r(x.rows, x.cols);
  for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

inline Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw ArgumentError("matrix subtraction: shape mismatch");
  Matrix r(x.rows, x.cols);
  for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

inline Matrix operator*(cplx s, const Matrix& x) {
  Matrix r(x.rows, x.cols);
  for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = s * x.a[k];
  return r;
}

// Product via the i-k-j loop order so the inner loop walks both operands
// row-major (cache-friendly without a transpose pass).
inline Matrix multiply(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw ArgumentError("matrix product: shape mismatch");
  Matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const cplx xik = x(i, k);
      if (xik == cplx(0.0, 0.0)) continue;
      const cplx* yrow = &y.a[static_cast<size_t>(k) * y.cols];
      cplx* rrow = &r.a[static_cast<size_t>(i) * r.cols];
      for (int j = 0; j < y.cols; ++j) rrow[j] += xik * yrow[j];
    }
  }
  return r;
}

inline Matrix adjoint(const Matrix& x) {
  Matrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = std::conj(x(i, j));
  return r;
}

inline Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const cplx xij = x(i, j);
      if (xij == cplx(0.0, 0.0)) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          r(i * y.rows + k, j * y.cols + l) = xij * y(k, l);
    }
  return r;
}

inline cplx trace(const Matrix& x) {
  cplx t = 0.0;
  for (int i = 0; i < std::min(x.rows, x.cols); ++i) t += x(i, i);
  return t;
}

// Tr[X Y] without forming the product: sum_{i,j} X(i,j) * Y(j,i).
inline cplx trace_product(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows || y.cols != x.rows)
    throw ArgumentError("trace of product: shape mismatch");
  cplx t = 0.0;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) t += x(i, j) * y(j, i);
  return t;
}

inline double frobenius_norm(const Matrix& x) {
  double s = 0.0;
  for (const cplx& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

inline double max_abs_entry(const Matrix& x) {
  double m = 0.0;
  for (const cplx& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace qht
