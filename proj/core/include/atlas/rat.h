#pragma once

#include "atlas/errors.h"

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace atlas {

using Int = long long;

// Exact rational number, always normalized: den > 0, gcd(|num|, den) = 1.
// Intermediate products go through 128-bit integers; a result that cannot
// be represented in 64 bits after normalization throws instead of wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(Int n) : num_(n) {}  // NOLINT: implicit by design
  Rat(Int n, Int d) {
    require(d != 0, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Int g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    require(b.num_ != 0, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

 private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 an = n < 0 ? -n : n;
    i128 g = gcd128(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    require(n >= lo && n <= hi && d <= hi, "rational overflow");
    Rat r;
    r.num_ = static_cast<Int>(n);
    r.den_ = static_cast<Int>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  Int num_ = 0;
  Int den_ = 1;
};

using QVec = std::vector<Rat>;
using IVec = std::vector<Int>;

// Fractional part in [0, 1).
inline Rat frac(const Rat& x) {
  Int q = x.numerator() / x.denominator();
  Rat f = x - Rat(q);
  if (f < Rat(0)) f += Rat(1);
  return f;
}

inline QVec frac(const QVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = frac(v[i]);
  return out;
}

inline bool is_integral(const Rat& x) { return x.denominator() == 1; }

inline bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

// Smallest N >= 1 with N*v integral.
inline Int common_denominator(const QVec& v) {
  Int d = 1;
  for (const auto& x : v) d = std::lcm(d, x.denominator());
  return d;
}

inline Rat dot(const IVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec operator+(const QVec& a, const QVec& b) {
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline QVec operator-(const QVec& a, const QVec& b) {
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline QVec operator*(const Rat& s, const QVec& a) {
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

// "a" for integers, "a/b" otherwise. Exact; never decimal.
inline std::string to_string(const Rat& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

inline std::string to_string(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

// Lexicographic total order usable as a canonical tie-break.
inline bool lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace atlas
