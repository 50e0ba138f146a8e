#include "atlas/cyclo.h"

#include "atlas/errors.h"

#include <map>
#include <numeric>
#include <sstream>

namespace atlas {

namespace {

Int euler_phi(Int n) {
  Int result = n;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Monic coefficients of Phi_n, low degree first. Computed as
// (x^n - 1) / prod_{d | n, d < n} Phi_d and cached.
const std::vector<Rat>& cyclotomic_poly(Int n) {
  static std::map<Int, std::vector<Rat>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Rat> num(static_cast<size_t>(n) + 1, Rat(0));
  num[0] = Rat(-1);
  num[static_cast<size_t>(n)] = Rat(1);
  for (Int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Rat>& div = cyclotomic_poly(d);
    // long division, exact
    std::vector<Rat> quot(num.size() - div.size() + 1, Rat(0));
    std::vector<Rat> rem = num;
    for (size_t i = quot.size(); i-- > 0;) {
      Rat f = rem[i + div.size() - 1];  // divisor is monic
      quot[i] = f;
      if (f == Rat(0)) continue;
      for (size_t j = 0; j < div.size(); ++j) rem[i + j] -= f * div[j];
    }
    for (const Rat& r : rem) require(r == Rat(0), "cyclotomic division not exact");
    num = std::move(quot);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

// Reduce a polynomial in zeta_n modulo Phi_n; result has size deg(Phi_n).
QVec reduce_mod_phi(QVec poly, Int n) {
  const std::vector<Rat>& phi = cyclotomic_poly(n);
  size_t deg = phi.size() - 1;
  if (poly.size() < deg) poly.resize(deg, Rat(0));
  for (size_t i = poly.size(); i-- > deg;) {
    Rat f = poly[i];
    if (f == Rat(0)) continue;
    // subtract f * x^{i-deg} * Phi_n
    for (size_t j = 0; j < phi.size(); ++j) poly[i - deg + j] -= f * phi[j];
  }
  poly.resize(deg);
  return poly;
}

Cyclo make(Int n, QVec coeffs) {
  Cyclo z;
  if (n <= 0) throw invariant_error("cyclotomic order must be positive");
  if (n == 1) {
    z.n = 1;
    z.c = {coeffs.empty() ? Rat(0) : coeffs[0]};
    return z;
  }
  z.n = n;
  z.c = reduce_mod_phi(std::move(coeffs), n);
  bool rational = true;
  for (size_t i = 1; i < z.c.size(); ++i)
    if (z.c[i] != Rat(0)) {
      rational = false;
      break;
    }
  if (rational) {
    z.n = 1;
    z.c = {z.c.empty() ? Rat(0) : z.c[0]};
  }
  return z;
}

}  // namespace

Int cyclo_degree(Int n) { return euler_phi(n); }

bool Cyclo::is_zero() const {
  for (const Rat& r : c)
    if (r != Rat(0)) return false;
  return true;
}

bool Cyclo::is_rational() const { return n == 1; }

Rat Cyclo::rational_value() const {
  require(n == 1, "not a rational cyclotomic value");
  return c.empty() ? Rat(0) : c[0];
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (n == o.n) return c == o.c;
  Int m = std::lcm(n, o.n);
  return promote(*this, m).c == promote(o, m).c;
}

Cyclo zeta(Int n, Int k) {
  require(n >= 1, "zeta order must be >= 1");
  k %= n;
  if (k < 0) k += n;
  QVec poly(static_cast<size_t>(k) + 1, Rat(0));
  poly[static_cast<size_t>(k)] = Rat(1);
  return make(n, std::move(poly));
}

Cyclo promote(const Cyclo& x, Int m) {
  require(m % x.n == 0, "promote target must be a multiple of the field order");
  if (m == x.n) return x;
  Int step = m / x.n;
  QVec poly(static_cast<size_t>(m), Rat(0));
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == Rat(0)) continue;
    Int e = (static_cast<Int>(i) * step) % m;
    poly[static_cast<size_t>(e)] += x.c[i];
  }
  Cyclo z;
  z.n = m;
  z.c = reduce_mod_phi(std::move(poly), m);
  return z;  // deliberately not collapsed: caller wants a fixed field
}

Cyclo operator+(const Cyclo& x, const Cyclo& y) {
  Int m = std::lcm(x.n, y.n);
  Cyclo a = promote(x, m), b = promote(y, m);
  QVec s = a.c;
  for (size_t i = 0; i < s.size(); ++i) s[i] += b.c[i];
  return make(m, std::move(s));
}

Cyclo operator-(const Cyclo& x) {
  Cyclo z = x;
  for (Rat& r : z.c) r = -r;
  return z;
}

Cyclo operator-(const Cyclo& x, const Cyclo& y) { return x + (-y); }

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
  if (x.n == 1) return x.rational_value() * y;
  if (y.n == 1) return y.rational_value() * x;
  Int m = std::lcm(x.n, y.n);
  Cyclo a = promote(x, m), b = promote(y, m);
  QVec prod(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == Rat(0)) continue;
    for (size_t j = 0; j < b.c.size(); ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  return make(m, std::move(prod));
}

Cyclo operator*(const Rat& s, const Cyclo& y) {
  if (s == Rat(0)) return Cyclo(Rat(0));
  Cyclo z = y;
  for (Rat& r : z.c) r *= s;
  return z;
}

Cyclo galois(const Cyclo& x, Int k) {
  if (x.n == 1) return x;
  require(std::gcd(((k % x.n) + x.n) % x.n, x.n) == 1, "galois exponent must be prime to the order");
  Cyclo acc(Rat(0));
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == Rat(0)) continue;
    acc = acc + x.c[i] * zeta(x.n, static_cast<Int>(i) * k);
  }
  return acc;
}

Cyclo conj(const Cyclo& x) { return x.n == 1 ? x : galois(x, x.n - 1); }

std::string Cyclo::str() const {
  if (n == 1) return to_string(c.empty() ? Rat(0) : c[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Rat(0)) continue;
    Rat v = c[i];
    if (first) {
      if (v < Rat(0)) os << "-", v = -v;
    } else {
      os << (v < Rat(0) ? "-" : "+");
      if (v < Rat(0)) v = -v;
    }
    first = false;
    if (i == 0) {
      os << to_string(v);
    } else {
      if (v != Rat(1)) os << to_string(v) << "*";
      os << "z" << n;
      if (i >= 2) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

bool cyclo_less(const Cyclo& x, const Cyclo& y) {
  Int m = std::lcm(x.n, y.n);
  Cyclo a = promote(x, m), b = promote(y, m);
  return lex_less(a.c, b.c);
}

}  // namespace atlas
