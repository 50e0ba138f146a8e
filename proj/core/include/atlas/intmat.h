#pragma once

#include "atlas/rat.h"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace atlas {

// Dense row-major integer matrix. Sizes here stay tiny (ranks <= 8, root
// counts <= 128), so int64 is ample for the elimination algorithms below.
struct IntMat {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  IntMat(std::initializer_list<std::initializer_list<Int>> init);

  Int& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  Int operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  static IntMat identity(size_t n);
  IntMat transposed() const;
  bool operator==(const IntMat& o) const = default;

  IVec row(size_t i) const;
  // Matrix-vector products; v in Z^cols resp. Q^cols.
  IVec apply(const IVec& v) const;
  QVec apply(const QVec& v) const;
};

IntMat operator*(const IntMat& x, const IntMat& y);

// Determinant by fraction-free (Bareiss) elimination. Square only.
Int det(const IntMat& m);

// Smith normal form: unimodular U (rows x rows), V (cols x cols) with
// U * A * V = D diagonal, d_1 | d_2 | ... , all d_i >= 0.
struct SmithForm {
  IntMat d, u, v;
  // Nonzero diagonal entries, in divisibility order.
  IVec elementary_divisors() const;
  // Product of divisors > 1; the order of the torsion part of coker(A).
  Int torsion_order() const;
  size_t rank() const;
};
SmithForm smith_form(const IntMat& m);

// Row-style Hermite normal form H = U*A with U unimodular, H upper staircase,
// pivots positive, entries above a pivot reduced into [0, pivot).
struct HermiteForm {
  IntMat h, u;
  size_t rank() const;
};
HermiteForm hermite_form(const IntMat& m);

// Rank over Q.
size_t rank(const IntMat& m);

// Basis of the rational kernel {x : A x = 0}, cleared to integer vectors
// with content 1.
std::vector<IVec> kernel_basis(const IntMat& m);

// Solve A x = b over Q; returns false when inconsistent.
bool solve(const IntMat& m, const QVec& b, QVec& x);

// Inverse of a square rational matrix given as IntMat over common den = 1.
// Returns false when singular. out is row-major rational.
bool invert(const IntMat& m, std::vector<QVec>& out);

}  // namespace atlas
