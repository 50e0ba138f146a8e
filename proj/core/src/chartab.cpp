#include "atlas/chartab.h"

#include "atlas/errors.h"

#include <algorithm>
#include <numeric>

namespace atlas {

namespace {

// ---------- arithmetic in F_p (p < 2^31, products fit in unsigned 64) ----------

using u64 = unsigned long long;

u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subm(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
u64 mulm(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// smallest prime p with p ≡ 1 (mod e) and p > floor
u64 find_prime(u64 e, u64 floor_) {
  u64 p = ((floor_ / e) + 1) * e + 1;
  while (!is_prime(p)) p += e;
  return p;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(u64 p) {
  std::vector<u64> qs = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : qs)
      if (powm(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw invariant_error("no primitive root found");
}

// ---------- dense matrices and polynomials over F_p ----------

using FMat = std::vector<std::vector<u64>>;  // row-major
using FPoly = std::vector<u64>;              // low degree first, no top zeros

void trim(FPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FPoly poly_mul(const FPoly& a, const FPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
  }
  trim(c);
  return c;
}

// remainder of a modulo b (b monic after scaling)
FPoly poly_mod(FPoly a, const FPoly& b, u64 p) {
  trim(a);
  u64 lead_inv = invm(b.back(), p);
  while (a.size() >= b.size()) {
    u64 f = mulm(a.back(), lead_inv, p);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = subm(a[shift + i], mulm(f, b[i], p), p);
    trim(a);
  }
  return a;
}

FPoly poly_gcd(FPoly a, FPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = invm(a.back(), p);
    for (u64& c : a) c = mulm(c, inv, p);
  }
  return a;
}

FPoly poly_divexact(const FPoly& a, const FPoly& b, u64 p) {
  FPoly rem = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 lead_inv = invm(b.back(), p);
  while (rem.size() >= b.size() && !rem.empty()) {
    u64 f = mulm(rem.back(), lead_inv, p);
    size_t shift = rem.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] = subm(rem[shift + i], mulm(f, b[i], p), p);
    trim(rem);
  }
  require(rem.empty(), "polynomial division not exact");
  trim(q);
  return q;
}

FPoly poly_powmod(FPoly base, u64 e, const FPoly& mod, u64 p) {
  FPoly r{1};
  base = poly_mod(std::move(base), mod, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), mod, p);
    base = poly_mod(poly_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return r;
}

FPoly poly_derivative(const FPoly& f, u64 p) {
  FPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(mulm(f[i], i % p, p));
  trim(d);
  return d;
}

// determinant mod p by Gaussian elimination
u64 det_modp(FMat m, u64 p) {
  size_t n = m.size();
  u64 det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = subm(0, det, p);
    }
    det = mulm(det, m[c][c], p);
    u64 inv = invm(m[c][c], p);
    for (size_t r = c + 1; r < n; ++r) {
      if (!m[r][c]) continue;
      u64 f = mulm(m[r][c], inv, p);
      for (size_t k = c; k < n; ++k) m[r][k] = subm(m[r][k], mulm(f, m[c][k], p), p);
    }
  }
  return det;
}

// characteristic polynomial det(xI - M) by interpolation at x = 0..n
FPoly char_poly(const FMat& m, u64 p) {
  size_t n = m.size();
  require(n + 1 <= p, "field too small for interpolation");
  std::vector<u64> xs(n + 1), ys(n + 1);
  for (u64 x = 0; x <= n; ++x) {
    FMat w = m;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) w[i][j] = subm(0, w[i][j], p);
      w[i][i] = addm(w[i][i], x, p);
    }
    xs[x] = x;
    ys[x] = det_modp(w, p);
  }
  // Lagrange interpolation
  FPoly acc;
  for (size_t i = 0; i <= n; ++i) {
    FPoly term{1};
    u64 denom = 1;
    for (size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      term = poly_mul(term, FPoly{subm(0, xs[j], p), 1}, p);
      denom = mulm(denom, subm(xs[i], xs[j], p), p);
    }
    u64 f = mulm(ys[i], invm(denom, p), p);
    if (acc.size() < term.size()) acc.resize(term.size(), 0);
    for (size_t k = 0; k < term.size(); ++k) acc[k] = addm(acc[k], mulm(f, term[k], p), p);
  }
  trim(acc);
  return acc;
}

// distinct roots of f, which is assumed to split over F_p; deterministic
void roots_of(const FPoly& f_in, u64 p, std::vector<u64>& out, u64& lcg) {
  FPoly f = f_in;
  trim(f);
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(mulm(subm(0, f[0], p), invm(f[1], p), p));
    return;
  }
  // split by quadratic-residue character of x+a, deterministic shift sequence
  while (true) {
    lcg = lcg * 6364136223846793005ULL + 1442695040888963407ULL;
    u64 a = (lcg >> 16) % p;
    FPoly h = poly_powmod(FPoly{a, 1}, (p - 1) / 2, f, p);
    if (h.empty()) continue;
    h[0] = subm(h[0], 1, p);
    trim(h);
    FPoly g = poly_gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      roots_of(g, p, out, lcg);
      roots_of(poly_divexact(f, g, p), p, out, lcg);
      return;
    }
  }
}

std::vector<u64> distinct_roots(const FPoly& f, u64 p, u64& lcg) {
  FPoly sf = f;
  trim(sf);
  FPoly d = poly_derivative(sf, p);
  if (!d.empty()) {
    FPoly g = poly_gcd(sf, d, p);
    if (g.size() > 1) sf = poly_divexact(sf, g, p);
  }
  std::vector<u64> out;
  roots_of(sf, p, out, lcg);
  std::sort(out.begin(), out.end());
  return out;
}

// reduced row echelon form; returns pivot columns
std::vector<size_t> rref(FMat& m, u64 p) {
  std::vector<size_t> pivots;
  size_t rows = m.size();
  if (rows == 0) return pivots;
  size_t cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    u64 inv = invm(m[r][c], p);
    for (size_t k = 0; k < cols; ++k) m[r][k] = mulm(m[r][k], inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (size_t k = 0; k < cols; ++k) m[i][k] = subm(m[i][k], mulm(f, m[r][k], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// basis of the nullspace of m (columns = variables)
std::vector<std::vector<u64>> nullspace(FMat m, u64 p, size_t cols) {
  std::vector<size_t> pivots = rref(m, p);
  std::vector<char> is_pivot(cols, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<u64>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = subm(0, m[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------- Dixon–Schneider ----------

struct ModpTable {
  u64 p;
  std::vector<std::vector<u64>> values;  // values[row][class]
  std::vector<Int> degrees;
};

ModpTable dixon_modp(const FiniteGroup& g) {
  const auto& classes = g.conjugacy_classes();
  size_t r = classes.size();
  size_t n = g.size();
  size_t e = g.exponent();
  u64 p = find_prime(e, std::max<u64>(n, 2 * r + 2));

  std::vector<size_t> class_of(n);
  for (size_t c = 0; c < r; ++c)
    for (size_t x : classes[c]) class_of[x] = c;
  std::vector<size_t> reps(r);
  for (size_t c = 0; c < r; ++c) reps[c] = g.class_rep(c);

  // structure constants: M_i[k][j] = #{x in C_i : x^{-1} rep_k in C_j}
  std::vector<FMat> mats(r, FMat(r, std::vector<u64>(r, 0)));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k)
      for (size_t x : classes[i]) {
        size_t j = class_of[g.mult(g.inverse(x), reps[k])];
        mats[i][k][j] = addm(mats[i][k][j], 1, p);
      }

  // split F_p^r into common eigenspaces of all M_i
  std::vector<std::vector<std::vector<u64>>> spaces;  // each: list of basis cols
  {
    std::vector<std::vector<u64>> full;
    for (size_t i = 0; i < r; ++i) {
      std::vector<u64> ei(r, 0);
      ei[i] = 1;
      full.push_back(ei);
    }
    spaces.push_back(full);
  }
  u64 lcg = 88172645463325252ULL;
  for (size_t i = 1; i < r; ++i) {  // class 0 is the identity: acts as I
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& basis : spaces) {
      size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // restriction A of M_i: M_i b_j = sum A[t][j] b_t; solve via rref
      // build matrix [B | M b_1 | ... | M b_d] with B as columns
      FMat aug(r, std::vector<u64>(d + d, 0));
      for (size_t row = 0; row < r; ++row)
        for (size_t j = 0; j < d; ++j) aug[row][j] = basis[j][row];
      for (size_t j = 0; j < d; ++j) {
        for (size_t row = 0; row < r; ++row) {
          u64 s = 0;
          for (size_t col = 0; col < r; ++col)
            s = addm(s, mulm(mats[i][row][col], basis[j][col], p), p);
          aug[row][d + j] = s;
        }
      }
      std::vector<size_t> piv = rref(aug, p);
      // first d pivots must be the basis columns (basis is independent)
      require(piv.size() >= d, "subspace basis degenerate");
      for (size_t t = 0; t < d; ++t) require(piv[t] == t, "subspace not in echelon position");
      FMat a(d, std::vector<u64>(d, 0));
      for (size_t t = 0; t < d; ++t)
        for (size_t j = 0; j < d; ++j) a[t][j] = aug[t][d + j];
      FPoly cp = char_poly(a, p);
      std::vector<u64> roots = distinct_roots(cp, p, lcg);
      if (roots.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      for (u64 lam : roots) {
        FMat shifted = a;
        for (size_t t = 0; t < d; ++t) shifted[t][t] = subm(shifted[t][t], lam, p);
        auto null_b = nullspace(shifted, p, d);
        require(!null_b.empty(), "charpoly root without eigenvector");
        std::vector<std::vector<u64>> sub;
        for (const auto& coeff : null_b) {
          std::vector<u64> v(r, 0);
          for (size_t j = 0; j < d; ++j) {
            if (!coeff[j]) continue;
            for (size_t row = 0; row < r; ++row)
              v[row] = addm(v[row], mulm(coeff[j], basis[j][row], p), p);
          }
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
    bool all_one = true;
    for (const auto& s : spaces) all_one &= s.size() == 1;
    if (all_one) break;
  }
  require(spaces.size() == r, "class algebra did not split into lines");

  // inverse-class map
  std::vector<size_t> inv_class(r);
  for (size_t c = 0; c < r; ++c) inv_class[c] = class_of[g.inverse(reps[c])];

  ModpTable out;
  out.p = p;
  for (auto& sp : spaces) {
    const std::vector<u64>& v = sp[0];
    require(v[0] != 0, "eigenvector vanishes at the identity class");
    u64 inv0 = invm(v[0], p);
    std::vector<u64> u(r);
    for (size_t k = 0; k < r; ++k) u[k] = mulm(v[k], inv0, p);  // chi(rep_k^{-1})/chi(1)
    u64 s = 0;
    for (size_t k = 0; k < r; ++k)
      s = addm(s, mulm(classes[k].size() % p, mulm(u[k], u[inv_class[k]], p), p), p);
    u64 deg2 = mulm(n % p, invm(s, p), p);
    Int deg = 0;
    for (Int d = 1; static_cast<u64>(d) * static_cast<u64>(d) <= static_cast<u64>(n); ++d)
      if (mulm(d, d, p) == deg2) {
        deg = d;
        break;
      }
    require(deg > 0, "degree not found");
    std::vector<u64> vals(r);
    for (size_t k = 0; k < r; ++k) vals[k] = mulm(static_cast<u64>(deg), u[inv_class[k]], p);
    out.values.push_back(std::move(vals));
    out.degrees.push_back(deg);
  }
  return out;
}

std::vector<std::vector<Cyclo>> lift_to_cyclotomic(const FiniteGroup& g, const ModpTable& t) {
  const auto& classes = g.conjugacy_classes();
  size_t r = classes.size();
  u64 p = t.p;
  size_t e = g.exponent();
  u64 z = powm(primitive_root(p), (p - 1) / e, p);

  std::vector<size_t> class_of(g.size());
  for (size_t c = 0; c < r; ++c)
    for (size_t x : classes[c]) class_of[x] = c;

  std::vector<std::vector<Cyclo>> rows;
  for (size_t row = 0; row < t.values.size(); ++row) {
    std::vector<Cyclo> vals(r);
    for (size_t k = 0; k < r; ++k) {
      size_t rep = g.class_rep(k);
      size_t m = g.order_of(rep);
      u64 zm = powm(z, e / m, p);
      u64 minv = invm(m % p, p);
      Cyclo acc(Rat(0));
      Int total = 0;
      for (size_t s = 0; s < m; ++s) {
        // multiplicity of zeta_m^s among the eigenvalues of rho(rep)
        u64 ms = 0;
        size_t pw = g.identity();
        for (size_t j = 0; j < m; ++j) {
          u64 chi_j = t.values[row][class_of[pw]];
          ms = addm(ms, mulm(chi_j, powm(invm(zm, p), (j * s) % m, p), p), p);
          pw = g.mult(pw, rep);
        }
        ms = mulm(ms, minv, p);
        require(ms <= static_cast<u64>(t.degrees[row]), "eigenvalue multiplicity overflow");
        total += static_cast<Int>(ms);
        if (ms) acc = acc + Rat(static_cast<Int>(ms)) * zeta(m, static_cast<Int>(s));
      }
      require(total == t.degrees[row], "eigenvalue multiplicities do not sum to the degree");
      vals[k] = acc;
    }
    rows.push_back(std::move(vals));
  }
  return rows;
}

// ---------- abelian dual construction ----------

std::vector<std::vector<Cyclo>> abelian_characters(const FiniteGroup& g) {
  size_t n = g.size();
  size_t e = g.exponent();
  // grow a generating chain; chars maintained as exponent vectors mod e on
  // the subgroup generated so far
  std::vector<char> in(n, 0);
  in[g.identity()] = 1;
  std::vector<size_t> members{g.identity()};
  std::vector<std::vector<Int>> chars{std::vector<Int>(n, -1)};
  chars[0][g.identity()] = 0;

  for (size_t cand = 0; cand < n; ++cand) {
    if (in[cand]) continue;
    // least m >= 1 with cand^m inside the current subgroup
    size_t m = 1, pw = cand;
    while (!in[pw]) {
      pw = g.mult(pw, cand);
      ++m;
    }
    std::vector<std::vector<Int>> next_chars;
    for (const auto& chi : chars) {
      Int a = chi[pw];  // chi(cand^m), exponent of zeta_e
      require(a >= 0 && a % static_cast<Int>(m) == 0, "character extension obstruction");
      for (size_t s = 0; s < m; ++s) {
        Int b = a / static_cast<Int>(m) + static_cast<Int>(s) * static_cast<Int>(e / m);
        std::vector<Int> ext = chi;
        size_t gp = g.identity();
        for (size_t tpow = 1; tpow < m; ++tpow) {
          gp = g.mult(gp, cand);
          for (size_t h : members)
            ext[g.mult(h, gp)] = (chi[h] + static_cast<Int>(tpow) * b) % static_cast<Int>(e);
        }
        next_chars.push_back(std::move(ext));
      }
    }
    chars = std::move(next_chars);
    std::vector<size_t> new_members = members;
    size_t gp = g.identity();
    for (size_t tpow = 1; tpow < m; ++tpow) {
      gp = g.mult(gp, cand);
      for (size_t h : members) {
        size_t x = g.mult(h, gp);
        if (!in[x]) {
          in[x] = 1;
          new_members.push_back(x);
        }
      }
    }
    members = std::move(new_members);
  }
  require(chars.size() == n, "abelian dual has wrong size");

  const auto& classes = g.conjugacy_classes();
  std::vector<std::vector<Cyclo>> rows;
  for (const auto& chi : chars) {
    std::vector<Cyclo> vals(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
      Int a = chi[g.class_rep(c)];
      require(a >= 0, "abelian character undefined on an element");
      vals[c] = zeta(static_cast<Int>(e), a);
    }
    rows.push_back(std::move(vals));
  }
  return rows;
}

}  // namespace

const Cyclo& CharacterTable::value_at(const FiniteGroup& g, size_t r, size_t element) const {
  return chars[r][g.class_of(element)];
}

size_t CharacterTable::trivial_row() const {
  for (size_t r = 0; r < chars.size(); ++r) {
    bool all_one = true;
    for (const Cyclo& v : chars[r])
      if (!(v == Cyclo(Rat(1)))) {
        all_one = false;
        break;
      }
    if (all_one) return r;
  }
  throw invariant_error("no trivial character found");
}

CharacterTable character_table(const FiniteGroup& g) {
  CharacterTable t;
  t.classes = g.conjugacy_classes();
  t.reps.resize(t.classes.size());
  for (size_t c = 0; c < t.classes.size(); ++c) t.reps[c] = g.class_rep(c);

  std::vector<std::vector<Cyclo>> rows;
  if (g.is_abelian()) {
    rows = abelian_characters(g);
  } else {
    ModpTable modp = dixon_modp(g);
    rows = lift_to_cyclotomic(g, modp);
  }
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    // degree first (identity class is first), then lexicographic values
    if (!(a[0] == b[0])) return cyclo_less(a[0], b[0]);
    for (size_t c = 1; c < a.size(); ++c)
      if (!(a[c] == b[c])) return cyclo_less(a[c], b[c]);
    return false;
  });
  t.chars = std::move(rows);
  Int sum_sq = 0;
  for (const auto& row : t.chars) {
    require(row[0].is_rational() && is_integral(row[0].rational_value()), "degree not an integer");
    Int d = row[0].rational_value().numerator();
    require(d >= 1, "degree must be positive");
    t.degrees.push_back(d);
    sum_sq += d * d;
  }
  require(sum_sq == static_cast<Int>(g.size()), "degrees do not sum-square to |G|");
  require(t.chars.size() == t.classes.size(), "row count must equal class count");
  return t;
}

void verify_character_table(const FiniteGroup& g, const CharacterTable& t) {
  size_t r = t.num_classes();
  require(t.num_chars() == r, "table is not square");
  // row orthogonality
  for (size_t a = 0; a < r; ++a)
    for (size_t b = 0; b < r; ++b) {
      Cyclo s(Rat(0));
      for (size_t c = 0; c < r; ++c)
        s = s + Rat(static_cast<Int>(t.classes[c].size())) * (t.chars[a][c] * conj(t.chars[b][c]));
      Cyclo expect(Rat(a == b ? static_cast<Int>(g.size()) : 0));
      require(s == expect, "row orthogonality fails");
    }
  // column orthogonality
  for (size_t c1 = 0; c1 < r; ++c1)
    for (size_t c2 = 0; c2 < r; ++c2) {
      Cyclo s(Rat(0));
      for (size_t a = 0; a < r; ++a) s = s + t.chars[a][c1] * conj(t.chars[a][c2]);
      Cyclo expect(Rat(0));
      if (c1 == c2)
        expect = Cyclo(Rat(static_cast<Int>(g.size() / t.classes[c1].size())));
      require(s == expect, "column orthogonality fails");
    }
}

size_t ExtendedQuotientFinite::total() const {
  size_t n = 0;
  for (const auto& f : fibers) n += f.labels.size();
  return n;
}

namespace {

ExtendedQuotientFinite extended_quotient_impl(const GAction& a, bool kind2) {
  a.check();
  ExtendedQuotientFinite out;
  for (const auto& orb : a.orbits()) {
    QuotientFiber f;
    f.rep = orb[0];
    f.orbit = orb;
    std::vector<Perm> stab_perms;
    for (size_t e : a.stabilizer(f.rep)) stab_perms.push_back(a.group->perm(e));
    f.stabilizer = FiniteGroup::from_elements(stab_perms);
    f.stab_table = character_table(f.stabilizer);
    size_t count = kind2 ? f.stab_table.num_chars() : f.stab_table.num_classes();
    f.labels.resize(count);
    std::iota(f.labels.begin(), f.labels.end(), size_t{0});
    if (kind2) {
      f.canonical = f.stab_table.trivial_row();
    } else {
      f.canonical = f.stabilizer.class_of(f.stabilizer.identity());
      require(f.canonical == 0, "identity class must come first");
    }
    out.fibers.push_back(std::move(f));
  }
  return out;
}

}  // namespace

ExtendedQuotientFinite extended_quotient_1(const GAction& a) {
  return extended_quotient_impl(a, false);
}

ExtendedQuotientFinite extended_quotient_2(const GAction& a) {
  return extended_quotient_impl(a, true);
}

CIrrSystem c_irr_system(const GAction& a) {
  ExtendedQuotientFinite eq = extended_quotient_2(a);
  CIrrSystem out;
  for (const auto& f : eq.fibers) {
    CIrrFiber fiber;
    fiber.rep = f.rep;
    size_t r = f.stab_table.num_classes();
    size_t triv = f.stab_table.trivial_row();
    // first admissible bijection in lexicographic order: class [1] (always
    // class 0) gets the trivial character, the rest pair up in order
    fiber.class_to_irrep.assign(r, 0);
    fiber.class_to_irrep[0] = triv;
    size_t next = 0;
    for (size_t c = 1; c < r; ++c) {
      if (next == triv) ++next;
      fiber.class_to_irrep[c] = next++;
    }
    fiber.admissible_count = 1;
    for (size_t k = 2; k < r; ++k) fiber.admissible_count *= static_cast<Int>(k);
    out.fibers.push_back(std::move(fiber));
  }
  return out;
}

CliffordReport clifford_count(const FiniteGroup& n, const FiniteGroup& gamma,
                              const std::vector<std::vector<size_t>>& action) {
  SemidirectProduct sd = semidirect_product(n, gamma, action);
  CharacterTable tab_n = character_table(n);
  CharacterTable tab_s = character_table(sd.group);

  // Gamma acts on Irr(N): (gamma . chi)(x) = chi(gamma^{-1} . x)
  GAction irr_action;
  irr_action.group = &gamma;
  irr_action.table.assign(gamma.size(), std::vector<size_t>(tab_n.num_chars(), 0));
  for (size_t gi = 0; gi < gamma.size(); ++gi) {
    const auto& back = action[gamma.inverse(gi)];
    for (size_t row = 0; row < tab_n.num_chars(); ++row) {
      std::vector<Cyclo> moved(tab_n.num_classes());
      for (size_t c = 0; c < tab_n.num_classes(); ++c)
        moved[c] = tab_n.chars[row][n.class_of(back[tab_n.reps[c]])];
      size_t target = tab_n.num_chars();
      for (size_t r2 = 0; r2 < tab_n.num_chars(); ++r2)
        if (tab_n.chars[r2] == moved) {
          target = r2;
          break;
        }
      require(target < tab_n.num_chars(), "twisted character is not in the table");
      irr_action.table[gi][row] = target;
    }
  }

  ExtendedQuotientFinite eq2 = extended_quotient_2(irr_action);

  CliffordReport rep;
  rep.irr_semidirect = tab_s.num_chars();
  rep.extended_quotient_2 = eq2.total();

  // count irreducibles of S whose restriction to N meets each orbit
  auto orbits = irr_action.orbits();
  rep.per_orbit_irr_over.assign(orbits.size(), 0);
  rep.per_orbit_expected.assign(orbits.size(), 0);
  for (size_t oi = 0; oi < orbits.size(); ++oi)
    rep.per_orbit_expected[oi] = eq2.fibers[oi].labels.size();
  for (size_t s_row = 0; s_row < tab_s.num_chars(); ++s_row) {
    size_t hit_orbit = orbits.size();
    for (size_t oi = 0; oi < orbits.size() && hit_orbit == orbits.size(); ++oi) {
      size_t chi = eq2.fibers[oi].rep;
      // <sigma|_N, chi> = |N|^{-1} sum_x sigma(x) conj(chi(x))
      Cyclo acc(Rat(0));
      for (size_t x = 0; x < n.size(); ++x) {
        const Cyclo& sv = tab_s.value_at(sd.group, s_row, sd.n_image[x]);
        const Cyclo& cv = tab_n.value_at(n, chi, x);
        acc = acc + sv * conj(cv);
      }
      if (!acc.is_zero()) hit_orbit = oi;
    }
    require(hit_orbit < orbits.size(), "restriction to N has no constituent");
    ++rep.per_orbit_irr_over[hit_orbit];
  }
  rep.cocycle_trivial_everywhere = rep.per_orbit_irr_over == rep.per_orbit_expected;
  if (n.is_abelian())
    require(rep.cocycle_trivial_everywhere, "abelian base must have trivial cocycles");
  return rep;
}

}  // namespace atlas
