#include "atlas/intmat.h"

#include "atlas/errors.h"

#include <algorithm>
#include <cstdlib>

namespace atlas {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> init) {
  rows = init.size();
  cols = rows ? init.begin()->size() : 0;
  a.reserve(rows * cols);
  for (const auto& r : init) {
    require(r.size() == cols, "IntMat: ragged initializer");
    for (Int x : r) a.push_back(x);
  }
}

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IVec IntMat::row(size_t i) const {
  return IVec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

IVec IntMat::apply(const IVec& v) const {
  require(v.size() == cols, "IntMat::apply: size mismatch");
  IVec out(rows, 0);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

QVec IntMat::apply(const QVec& v) const {
  require(v.size() == cols, "IntMat::apply: size mismatch");
  QVec out(rows, Rat(0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) out[i] += Rat((*this)(i, j)) * v[j];
  return out;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  require(x.cols == y.rows, "IntMat product: size mismatch");
  IntMat z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      Int v = x(i, k);
      if (!v) continue;
      for (size_t j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

Int det(const IntMat& m) {
  require(m.rows == m.cols, "det: square matrices only");
  size_t n = m.rows;
  if (n == 0) return 1;
  // Bareiss: exact integer elimination, previous pivot divides exactly.
  std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) w[i][j] = m(i, j);
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (w[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && w[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(w[k], w[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
    prev = w[k][k];
  }
  return sign * w[n - 1][n - 1];
}

namespace {

// Shared elimination helpers acting on matrix + recorded transforms.
void swap_rows(IntMat& m, IntMat& u, size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
  for (size_t c = 0; c < u.cols; ++c) std::swap(u(i, c), u(j, c));
}

void swap_cols(IntMat& m, IntMat& v, size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
  for (size_t r = 0; r < v.rows; ++r) std::swap(v(r, i), v(r, j));
}

// row(i) -= f * row(j)
void add_row(IntMat& m, IntMat& u, size_t i, size_t j, Int f) {
  if (!f) return;
  for (size_t c = 0; c < m.cols; ++c) m(i, c) -= f * m(j, c);
  for (size_t c = 0; c < u.cols; ++c) u(i, c) -= f * u(j, c);
}

// col(i) -= f * col(j)
void add_col(IntMat& m, IntMat& v, size_t i, size_t j, Int f) {
  if (!f) return;
  for (size_t r = 0; r < m.rows; ++r) m(r, i) -= f * m(r, j);
  for (size_t r = 0; r < v.rows; ++r) v(r, i) -= f * v(r, j);
}

void negate_row(IntMat& m, IntMat& u, size_t i) {
  for (size_t c = 0; c < m.cols; ++c) m(i, c) = -m(i, c);
  for (size_t c = 0; c < u.cols; ++c) u(i, c) = -u(i, c);
}

}  // namespace

IVec SmithForm::elementary_divisors() const {
  IVec out;
  size_t n = std::min(d.rows, d.cols);
  for (size_t i = 0; i < n; ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

Int SmithForm::torsion_order() const {
  Int t = 1;
  for (Int x : elementary_divisors()) t *= x;
  return t;
}

size_t SmithForm::rank() const { return elementary_divisors().size(); }

SmithForm smith_form(const IntMat& m) {
  SmithForm s;
  s.d = m;
  s.u = IntMat::identity(m.rows);
  s.v = IntMat::identity(m.cols);
  IntMat& d = s.d;
  size_t n = std::min(m.rows, m.cols);
  for (size_t k = 0; k < n; ++k) {
    // Find the nonzero entry of minimal absolute value in the trailing block.
    size_t pi = k, pj = k;
    Int best = 0;
    for (size_t i = k; i < d.rows; ++i)
      for (size_t j = k; j < d.cols; ++j) {
        Int v = std::llabs(d(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(d, s.u, k, pi);
    swap_cols(d, s.v, k, pj);
    // Reduce row/column against the pivot until clean.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = k + 1; i < d.rows; ++i) {
        Int f = d(i, k) / d(k, k);
        add_row(d, s.u, i, k, f);
        if (d(i, k) != 0) {
          swap_rows(d, s.u, k, i);
          dirty = true;
        }
      }
      for (size_t j = k + 1; j < d.cols; ++j) {
        Int f = d(k, j) / d(k, k);
        add_col(d, s.v, j, k, f);
        if (d(k, j) != 0) {
          swap_cols(d, s.v, k, j);
          dirty = true;
        }
      }
    }
    if (d(k, k) < 0) negate_row(d, s.u, k);
  }
  // Enforce the divisibility chain d_k | d_{k+1}.
  for (size_t k = 0; k + 1 < n; ++k) {
    for (size_t j = k + 1; j < n; ++j) {
      if (d(j, j) == 0 || d(k, k) == 0) continue;
      if (d(j, j) % d(k, k) == 0) continue;
      // Classic trick: fold entry (j,j) into column k, re-eliminate the 2x2.
      add_col(d, s.v, k, j, -1);  // col k += col j
      // Now positions (k,k) and (j,k) are nonzero; redo elimination at k.
      for (size_t kk = k; kk < n; ++kk) {
        size_t pi = kk, pj = kk;
        Int best = 0;
        for (size_t i = kk; i < d.rows; ++i)
          for (size_t jj = kk; jj < d.cols; ++jj) {
            Int v = std::llabs(d(i, jj));
            if (v != 0 && (best == 0 || v < best)) {
              best = v;
              pi = i;
              pj = jj;
            }
          }
        if (best == 0) break;
        swap_rows(d, s.u, kk, pi);
        swap_cols(d, s.v, kk, pj);
        bool dirty = true;
        while (dirty) {
          dirty = false;
          for (size_t i = kk + 1; i < d.rows; ++i) {
            Int f = d(i, kk) / d(kk, kk);
            add_row(d, s.u, i, kk, f);
            if (d(i, kk) != 0) {
              swap_rows(d, s.u, kk, i);
              dirty = true;
            }
          }
          for (size_t jj = kk + 1; jj < d.cols; ++jj) {
            Int f = d(kk, jj) / d(kk, kk);
            add_col(d, s.v, jj, kk, f);
            if (d(kk, jj) != 0) {
              swap_cols(d, s.v, kk, jj);
              dirty = true;
            }
          }
        }
        if (d(kk, kk) < 0) negate_row(d, s.u, kk);
      }
      // Restart the divisibility sweep from scratch.
      k = static_cast<size_t>(-1);
      break;
    }
  }
  return s;
}

HermiteForm hermite_form(const IntMat& m) {
  HermiteForm h;
  h.h = m;
  h.u = IntMat::identity(m.rows);
  IntMat& a = h.h;
  size_t r = 0;
  for (size_t c = 0; c < a.cols && r < a.rows; ++c) {
    // Euclidean column clean-up below row r.
    while (true) {
      size_t p = r;
      Int best = 0;
      for (size_t i = r; i < a.rows; ++i) {
        Int v = std::llabs(a(i, c));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          p = i;
        }
      }
      if (best == 0) break;
      swap_rows(a, h.u, r, p);
      bool all_zero = true;
      for (size_t i = r + 1; i < a.rows; ++i) {
        Int f = a(i, c) / a(r, c);
        add_row(a, h.u, i, r, f);
        if (a(i, c) != 0) all_zero = false;
      }
      if (all_zero) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) negate_row(a, h.u, r);
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < r; ++i) {
      Int f = a(i, c) / a(r, c);
      if (a(i, c) - f * a(r, c) < 0) f -= 1;
      add_row(a, h.u, i, r, f);
    }
    ++r;
  }
  return h;
}

size_t HermiteForm::rank() const {
  size_t n = 0;
  for (size_t i = 0; i < h.rows; ++i) {
    bool nz = false;
    for (size_t j = 0; j < h.cols; ++j)
      if (h(i, j)) nz = true;
    if (nz) ++n;
  }
  return n;
}

size_t rank(const IntMat& m) { return hermite_form(m).rank(); }

std::vector<IVec> kernel_basis(const IntMat& m) {
  // SNF: U A V = D. A (V e_j) = U^-1 D e_j = 0 exactly when D_jj = 0,
  // so the columns of V past the rank span the kernel.
  SmithForm s = smith_form(m);
  size_t r = s.rank();
  std::vector<IVec> out;
  for (size_t j = r; j < m.cols; ++j) {
    IVec col(m.cols);
    for (size_t i = 0; i < m.cols; ++i) col[i] = s.v(i, j);
    Int g = 0;
    for (Int x : col) g = std::gcd(g, std::llabs(x));
    if (g > 1)
      for (Int& x : col) x /= g;
    out.push_back(col);
  }
  return out;
}

bool solve(const IntMat& m, const QVec& b, QVec& x) {
  require(b.size() == m.rows, "solve: size mismatch");
  size_t R = m.rows, C = m.cols;
  std::vector<QVec> w(R, QVec(C + 1, Rat(0)));
  for (size_t i = 0; i < R; ++i) {
    for (size_t j = 0; j < C; ++j) w[i][j] = Rat(m(i, j));
    w[i][C] = b[i];
  }
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && w[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(w[r], w[p]);
    Rat inv = Rat(1) / w[r][c];
    for (size_t j = c; j <= C; ++j) w[r][j] *= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == r || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (size_t j = c; j <= C; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < R; ++i)
    if (w[i][C] != 0) return false;
  x.assign(C, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w[i][C];
  return true;
}

bool invert(const IntMat& m, std::vector<QVec>& out) {
  require(m.rows == m.cols, "invert: square matrices only");
  size_t n = m.rows;
  std::vector<QVec> w(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = Rat(m(i, j));
    w[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && w[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(w[c], w[p]);
    Rat inv = Rat(1) / w[c][c];
    for (size_t j = 0; j < 2 * n; ++j) w[c][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  out.assign(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = w[i][n + j];
  return true;
}

}  // namespace atlas
