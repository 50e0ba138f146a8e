#pragma once

#include "atlas/rat.h"

#include <string>
#include <vector>

namespace atlas {

// Element of the cyclotomic field Q(zeta_n), stored as a polynomial in
// zeta_n reduced modulo the n-th cyclotomic polynomial. Canonical form, so
// equality is coefficient-wise. Orders stay small (group exponents <= ~200),
// which keeps the dense representation cheap.
struct Cyclo {
  Int n = 1;  // field order; 1 means rational
  QVec c;     // coefficients of 1, zeta, ..., zeta^{deg-1}; size = deg(Phi_n)

  Cyclo() : c{Rat(0)} {}
  explicit Cyclo(const Rat& r) : c{r} {}
  explicit Cyclo(Int i) : c{Rat(i)} {}

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()
  std::string str() const;     // exact, e.g. "1/2", "z12^4", "-1+z5"

  bool operator==(const Cyclo& o) const;
};

// zeta_n^k
Cyclo zeta(Int n, Int k);

Cyclo operator+(const Cyclo& x, const Cyclo& y);
Cyclo operator-(const Cyclo& x, const Cyclo& y);
Cyclo operator*(const Cyclo& x, const Cyclo& y);
Cyclo operator*(const Rat& s, const Cyclo& y);
Cyclo operator-(const Cyclo& x);

// Complex conjugate (zeta -> zeta^{-1}).
Cyclo conj(const Cyclo& x);

// Galois twist zeta_n -> zeta_n^k, gcd(k, n) = 1.
Cyclo galois(const Cyclo& x, Int k);

// Rewrite in Q(zeta_m); requires n | m.
Cyclo promote(const Cyclo& x, Int m);

// Degree of Q(zeta_n), i.e. Euler phi(n).
Int cyclo_degree(Int n);

// Total order for deterministic tie-breaks (field order, then coeffs lex).
bool cyclo_less(const Cyclo& x, const Cyclo& y);

}  // namespace atlas
