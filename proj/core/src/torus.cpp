#include "atlas/torus.h"

#include "atlas/errors.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace atlas {

TorusPoint make_torus_point(const QVec& raw) {
  TorusPoint t;
  t.v.reserve(raw.size());
  for (const Rat& x : raw) t.v.push_back(frac(x));
  return t;
}

TorusPoint torus_add(const TorusPoint& a, const TorusPoint& b) {
  require(a.v.size() == b.v.size(), "adding torus points of different rank");
  return make_torus_point(a.v + b.v);
}

TorusPoint torus_neg(const TorusPoint& a) {
  QVec m;
  for (const Rat& x : a.v) m.push_back(Rat(0) - x);
  return make_torus_point(m);
}

Int torus_order(const TorusPoint& a) {
  Int n = 1;
  for (const Rat& x : a.v) n = std::lcm(n, x.denominator());
  return n;
}

bool root_trivial_on(const RootDatum& rd, size_t root, const TorusPoint& t) {
  return is_integral(dot(rd.roots[root], t.v));
}

TorusPoint weyl_apply(const WeylGroup& w, size_t wi, const TorusPoint& t) {
  return make_torus_point(w.act_y(wi, t.v));
}

std::string to_string(const TorusPoint& t) { return to_string(t.v); }

TorusPoint canonical_orbit_point(const RootDatum& rd, const WeylGroup& w, const TorusPoint& t) {
  (void)rd;
  TorusPoint best = make_torus_point(t.v);
  for (size_t wi = 0; wi < w.size(); ++wi) {
    TorusPoint im = weyl_apply(w, wi, t);
    if (im.v < best.v) best = im;
  }
  return best;
}

std::vector<TorusPoint> torus_grid(size_t rank, Int bound) {
  require(bound >= 1, "grid bound must be positive");
  std::vector<QVec> pts;
  for (Int d = 1; d <= bound; ++d) {
    std::vector<Int> digit(rank, 0);
    while (true) {
      QVec v(rank);
      for (size_t i = 0; i < rank; ++i) v[i] = Rat(digit[i], d);
      pts.push_back(std::move(v));
      size_t i = 0;
      for (; i < rank; ++i) {
        if (++digit[i] < d) break;
        digit[i] = 0;
      }
      if (i == rank) break;
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<TorusPoint> out;
  out.reserve(pts.size());
  for (QVec& v : pts) out.push_back(make_torus_point(std::move(v)));
  return out;
}

std::vector<TorusPoint> enumerate_torus_subgroup(const FiniteTorusSubgroup& a, size_t rank,
                                                 size_t bound) {
  std::vector<TorusPoint> elems;
  TorusPoint zero;
  zero.v.assign(rank, Rat(0));
  elems.push_back(zero);
  for (const TorusPoint& g : a.generators)
    require(g.v.size() == rank, "generator rank mismatch");
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const TorusPoint& g : a.generators) {
      TorusPoint next = torus_add(elems[head], g);
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) {
        require(elems.size() < bound, "torus subgroup exceeds bound");
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end(),
            [](const TorusPoint& x, const TorusPoint& y) { return lex_less(x.v, y.v); });
  return elems;
}

PseudoLevi pseudo_levi(const RootDatum& rd, const WeylGroup& w, const FiniteTorusSubgroup& a) {
  std::vector<TorusPoint> gens;
  for (const TorusPoint& g : a.generators) {
    require(g.v.size() == rd.rank, "generator rank mismatch");
    gens.push_back(make_torus_point(g.v));
  }

  PseudoLevi out;
  std::vector<size_t> trivial_roots;
  for (size_t r = 0; r < rd.num_roots(); ++r) {
    bool triv = true;
    for (const TorusPoint& g : gens) triv &= root_trivial_on(rd, r, g);
    if (triv) trivial_roots.push_back(r);
  }
  out.sub = subsystem_of(rd, trivial_roots);

  // isotropy group: stabilizes every generator mod the lattice
  for (size_t i = 0; i < w.size(); ++i) {
    bool fixes = true;
    for (const TorusPoint& g : gens) fixes &= weyl_apply(w, i, g) == g;
    if (fixes) out.w_a.push_back(i);
  }

  // reflection subgroup generated inside the subsystem
  {
    std::vector<char> seen(w.size(), 0);
    std::vector<size_t> queue{w.identity()};
    seen[w.identity()] = 1;
    for (size_t head = 0; head < queue.size(); ++head)
      for (size_t s : out.sub.simple_indices) {
        size_t nxt = w.mult(queue[head], w.reflection(s));
        if (!seen[nxt]) {
          seen[nxt] = 1;
          queue.push_back(nxt);
        }
      }
    out.w_m0 = std::move(queue);
    std::sort(out.w_m0.begin(), out.w_m0.end());
  }

  // realize W_A on root permutations and form the component group
  {
    std::vector<Perm> perms;
    for (size_t i : out.w_a) perms.push_back(w[i].perm);
    out.wa_group = FiniteGroup::from_elements(perms);
    require(out.wa_group.size() == out.w_a.size(), "isotropy permutations must be distinct");
    out.wa_to_weyl.resize(out.wa_group.size());
    for (size_t e = 0; e < out.wa_group.size(); ++e)
      out.wa_to_weyl[e] = w.index_of_perm(out.wa_group.perm(e));
    std::vector<size_t> m0_in_wa;
    for (size_t i : out.w_m0) m0_in_wa.push_back(out.wa_group.index_of(w[i].perm));
    out.pi0 = quotient_group(out.wa_group, m0_in_wa);
  }
  require(out.w_a.size() == out.w_m0.size() * out.pi0_order(),
          "isotropy group must factor through the component group");

  // unique section: in every coset exactly one element preserves the simple
  // system of the subsystem
  {
    std::vector<size_t> simple_set = out.sub.simple_indices;
    std::sort(simple_set.begin(), simple_set.end());
    out.splitting.assign(out.pi0_order(), w.size());
    for (size_t e = 0; e < out.wa_group.size(); ++e) {
      size_t wi = out.wa_to_weyl[e];
      std::vector<size_t> image;
      for (size_t s : simple_set) image.push_back(w[wi].perm[s]);
      std::sort(image.begin(), image.end());
      if (image != simple_set) continue;
      size_t part = out.pi0.projection[e];
      require(out.splitting[part] == w.size(), "two section candidates in one coset");
      out.splitting[part] = wi;
    }
    for (size_t s : out.splitting) require(s < w.size(), "coset without a section candidate");
    require(out.splitting[out.pi0.group.identity()] == w.identity(),
            "section at the identity must be the identity");
    // the section is a group homomorphism
    for (size_t x = 0; x < out.pi0_order(); ++x)
      for (size_t y = 0; y < out.pi0_order(); ++y)
        require(w.mult(out.splitting[x], out.splitting[y]) ==
                    out.splitting[out.pi0.group.mult(x, y)],
                "section must be multiplicative");
  }
  return out;
}

PseudoLevi stabilizer(const RootDatum& rd, const WeylGroup& w, const TorusPoint& t) {
  FiniteTorusSubgroup a;
  a.generators.push_back(t);
  return pseudo_levi(rd, w, a);
}

PseudoLevi bernstein_data(const RootDatum& rd, const WeylGroup& w,
                          const FiniteTorusSubgroup& c_s) {
  return pseudo_levi(rd, w, c_s);
}

std::vector<FixedComponent> fixed_components(const RootDatum& rd, const WeylGroup& wg,
                                             size_t wi) {
  size_t r = rd.rank;
  IntMat b(r, r);
  IntMat yw = wg.y_matrix(wi);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) b(i, j) = (i == j ? 1 : 0) - yw(i, j);
  SmithForm sf = smith_form(b);

  std::vector<size_t> torsion_pos;
  size_t dim = 0;
  for (size_t i = 0; i < r; ++i) {
    Int d = sf.d(i, i);
    if (d == 0)
      ++dim;
    else if (d > 1)
      torsion_pos.push_back(i);
  }

  // rational inverse of V once; base = V * (c_i / d_i)
  std::vector<FixedComponent> out;
  IVec counter(torsion_pos.size(), 0);
  while (true) {
    QVec s(r, Rat(0));
    for (size_t k = 0; k < torsion_pos.size(); ++k) {
      size_t i = torsion_pos[k];
      s[i] = Rat(counter[k]) / Rat(sf.d(i, i));
    }
    QVec base(r, Rat(0));
    for (size_t row = 0; row < r; ++row) {
      Rat acc(0);
      for (size_t col = 0; col < r; ++col) acc = acc + Rat(sf.v(row, col)) * s[col];
      base[row] = acc;
    }
    // (1 - w) base must be integral
    for (size_t row = 0; row < r; ++row) {
      Rat acc(0);
      for (size_t col = 0; col < r; ++col) acc = acc + Rat(b(row, col)) * base[col];
      require(is_integral(acc), "component base point must be fixed modulo the lattice");
    }
    FixedComponent fc;
    fc.w = wi;
    fc.base = make_torus_point(base);
    fc.torsion_label = counter;
    fc.dim = dim;
    out.push_back(std::move(fc));

    size_t k = 0;
    while (k < counter.size()) {
      ++counter[k];
      if (counter[k] < sf.d(torsion_pos[k], torsion_pos[k])) break;
      counter[k] = 0;
      ++k;
    }
    if (k == counter.size()) break;
  }
  require(static_cast<Int>(out.size()) == sf.torsion_order(),
          "component count must equal the torsion order");
  return out;
}

CharConditionReport check_condition_char(const RootDatum& rd, Int p) {
  require(p >= 2, "residual characteristic must be at least 2");
  std::string types = rd.label.substr(0, rd.label.find('-'));
  CharConditionReport rep;
  size_t pos = 0;
  while (pos < types.size()) {
    size_t next = types.find('x', pos);
    std::string fac = types.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? types.size() : next + 1;
    require(fac.size() >= 2, "malformed factor label");
    char fam = fac[0];
    Int n = std::stol(fac.substr(1));
    bool ok = true;
    switch (fam) {
      case 'A': ok = p > n + 1; break;
      case 'B':
      case 'C':
      case 'D': ok = p != 2; break;
      case 'G': ok = p != 2 && p != 3 && p != 5; break;
      default: throw invariant_error("unknown family in label");
    }
    rep.ok &= ok;
    rep.factors.emplace_back(fac, ok);
  }
  return rep;
}

bool has_simply_connected_derived_group(const RootDatum& rd) {
  // coroots span the cocharacter lattice exactly when the Smith form of the
  // simple-coroot matrix is the identity
  IntMat m(rd.simples.size(), rd.rank);
  for (size_t i = 0; i < rd.simples.size(); ++i)
    for (size_t j = 0; j < rd.rank; ++j) m(i, j) = rd.coroots[rd.simples[i]][j];
  SmithForm sf = smith_form(m);
  if (sf.rank() != rd.rank) return false;
  for (Int d : sf.elementary_divisors())
    if (d != 1) return false;
  return true;
}

ConnectednessHint connectedness_hint(const RootDatum& rd, const WeylGroup& w,
                                     const FiniteTorusSubgroup& c_s, Int p) {
  PseudoLevi h = pseudo_levi(rd, w, c_s);
  ConnectednessHint hint;
  hint.connected = h.connected();
  hint.sc_criterion_applies =
      has_simply_connected_derived_group(rd) && check_condition_char(rd, p).ok;
  if (hint.sc_criterion_applies)
    require(hint.connected, "criterion guarantees a connected centralizer");
  return hint;
}

}  // namespace atlas
