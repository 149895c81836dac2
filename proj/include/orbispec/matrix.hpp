#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "orbispec/rational.hpp"

namespace orbispec {

/**
 * Dense row-major matrix over an exact ring.  0x0 matrices are legal and
 * behave as the identity of the empty space (det 1, rank 0).
 */
template <class T>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const DenseMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }
};

using IntMatrix = DenseMatrix<Int>;
using RatMatrix = DenseMatrix<Rat>;

template <class T>
DenseMatrix<T> mat_mul(const DenseMatrix<T>& x, const DenseMatrix<T>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  DenseMatrix<T> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const T& v = x.at(i, k);
      if (v == T(0)) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

template <class T>
DenseMatrix<T> mat_transpose(const DenseMatrix<T>& x) {
  DenseMatrix<T> z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

template <class T>
std::vector<T> mat_apply(const DenseMatrix<T>& m, const std::vector<T>& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("mat_apply: shape mismatch");
  std::vector<T> w(m.rows, T(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) w[i] += m.at(i, j) * v[j];
  return w;
}

RatMatrix to_rat(const IntMatrix& m);
bool is_integral(const RatMatrix& m);
IntMatrix to_int(const RatMatrix& m);  // throws if any entry is non-integral

// Fraction-free Gaussian elimination (Bareiss).  Exact rank and determinant
// for integer matrices without leaving Z.
int bareiss_rank(IntMatrix m);
Int bareiss_det(IntMatrix m);  // square input

int rat_rank(const RatMatrix& m);
Rat rat_det(RatMatrix m);

// Basis of the right kernel {v : Av = 0}, via rational Gauss-Jordan.
std::vector<std::vector<Rat>> kernel_basis(RatMatrix m);

std::optional<RatMatrix> rat_inverse(const RatMatrix& m);

// Solves A X = B exactly where A has full column rank and the system is
// consistent; returns nullopt otherwise.  A may have more rows than columns.
std::optional<RatMatrix> solve_exact(const RatMatrix& a, const RatMatrix& b);

/**
 * Smith normal form: unimodular U (m x m) and V (n x n) with U*A*V = D,
 * D diagonal with nonnegative entries d_1 | d_2 | ... .
 */
struct SmithResult {
  IntMatrix u, d, v;
};

SmithResult smith_normal_form(const IntMatrix& a);

}  // namespace orbispec
