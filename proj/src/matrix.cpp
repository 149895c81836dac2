#include "orbispec/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace orbispec {

std::string rat_to_string(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto pos = s.find('/');
  try {
    if (pos == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, pos)), q(s.substr(pos + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

bool is_integral(const RatMatrix& m) {
  return std::all_of(m.a.begin(), m.a.end(),
                     [](const Rat& q) { return denominator(q) == 1; });
}

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (denominator(m.a[i]) != 1)
      throw std::invalid_argument("to_int: non-integral entry");
    r.a[i] = numerator(m.a[i]);
  }
  return r;
}

namespace {

// Bareiss elimination in place; returns rank, fills sign/last pivot for det.
int bareiss(IntMatrix& m, Int& det_out, bool want_det) {
  int n = m.rows, c = m.cols;
  Int prev = 1;
  int sign = 1, row = 0;
  int rank = 0;
  for (int col = 0; col < c && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < c; ++j) std::swap(m.at(piv, j), m.at(row, j));
      sign = -sign;
    }
    for (int i = row + 1; i < n; ++i) {
      for (int j = col + 1; j < c; ++j)
        m.at(i, j) = (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
      m.at(i, col) = 0;
    }
    prev = m.at(row, col);
    ++row;
    ++rank;
  }
  if (want_det) {
    if (rank < n)
      det_out = 0;
    else
      det_out = sign > 0 ? prev : Int(-prev);
  }
  return rank;
}

}  // namespace

int bareiss_rank(IntMatrix m) {
  Int d;
  return bareiss(m, d, false);
}

Int bareiss_det(IntMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("bareiss_det: not square");
  if (m.rows == 0) return 1;
  Int d;
  bareiss(m, d, true);
  return d;
}

int rat_rank(const RatMatrix& m) {
  // clear denominators rowwise (rank-preserving), then Bareiss
  IntMatrix z(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols; ++j) l = lcm(l, denominator(m.at(i, j)));
    for (int j = 0; j < m.cols; ++j)
      z.at(i, j) = numerator(m.at(i, j)) * (l / denominator(m.at(i, j)));
  }
  return bareiss_rank(z);
}

Rat rat_det(RatMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("rat_det: not square");
  int n = m.rows;
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rat inv = Rat(1) / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      Rat f = m.at(i, col) * inv;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

namespace {

// reduced row echelon form; returns pivot column per pivot row
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rat inv = Rat(1) / m.at(row, col);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> kernel_basis(RatMatrix m) {
  int n = m.cols;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> rat_inverse(const RatMatrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n) return std::nullopt;
  for (int r = 0; r < n; ++r)
    if (piv[r] != r) return std::nullopt;  // singular left block
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<RatMatrix> solve_exact(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("solve_exact: shape mismatch");
  RatMatrix aug(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) aug.at(i, a.cols + j) = b.at(i, j);
  }
  std::vector<int> piv = rref(aug);
  // full column rank on the left block and no pivot in the right block
  if (static_cast<int>(piv.size()) < a.cols) return std::nullopt;
  for (size_t r = 0; r < piv.size(); ++r)
    if (piv[r] >= a.cols) return std::nullopt;  // inconsistent
  RatMatrix x(a.cols, b.cols);
  for (int i = 0; i < a.cols; ++i)
    for (int j = 0; j < b.cols; ++j) x.at(i, j) = aug.at(i, a.cols + j);
  // verify (rows beyond the pivot block must also be satisfied)
  RatMatrix check = mat_mul(a, x);
  if (!(check == b)) return std::nullopt;
  return x;
}

namespace {

void row_op(IntMatrix& m, int i, int k, const Int& f) {
  // row_i += f * row_k
  for (int j = 0; j < m.cols; ++j) m.at(i, j) += f * m.at(k, j);
}

void col_op(IntMatrix& m, int j, int k, const Int& f) {
  for (int i = 0; i < m.rows; ++i) m.at(i, j) += f * m.at(i, k);
}

void swap_rows(IntMatrix& m, int i, int k) {
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(k, j));
}

void swap_cols(IntMatrix& m, int j, int k) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, j), m.at(i, k));
}

void negate_row(IntMatrix& m, int i) {
  for (int j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  int m = a.rows, n = a.cols;
  SmithResult res{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  int t = std::min(m, n);
  for (int k = 0; k < t; ++k) {
    // find smallest nonzero entry in the remaining block as pivot
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = k; i < m; ++i)
      for (int j = k; j < n; ++j) {
        Int v2 = abs(d.at(i, j));
        if (v2 != 0 && (pi < 0 || v2 < best)) { best = v2; pi = i; pj = j; }
      }
    if (pi < 0) break;  // block is zero
    if (pi != k) { swap_rows(d, k, pi); swap_rows(u, k, pi); }
    if (pj != k) { swap_cols(d, k, pj); swap_cols(v, k, pj); }
    bool again = true;
    while (again) {
      again = false;
      for (int i = k + 1; i < m; ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = d.at(i, k) / d.at(k, k);
        row_op(d, i, k, -q);
        row_op(u, i, k, -q);
        if (d.at(i, k) != 0) {
          // remainder is smaller; promote it to pivot position
          swap_rows(d, k, i);
          swap_rows(u, k, i);
          again = true;
        }
      }
      for (int j = k + 1; j < n; ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = d.at(k, j) / d.at(k, k);
        col_op(d, j, k, -q);
        col_op(v, j, k, -q);
        if (d.at(k, j) != 0) {
          swap_cols(d, k, j);
          swap_cols(v, k, j);
          again = true;
        }
      }
    }
    // pivot must divide everything below-right; if not, fold the offender in
    for (int i = k + 1; i < m && !again; ++i)
      for (int j = k + 1; j < n; ++j)
        if (d.at(i, j) % d.at(k, k) != 0) {
          row_op(d, k, i, 1);
          row_op(u, k, i, 1);
          again = true;
          break;
        }
    if (again) { --k; continue; }
    if (d.at(k, k) < 0) { negate_row(d, k); negate_row(u, k); }
  }
  return res;
}

}  // namespace orbispec
