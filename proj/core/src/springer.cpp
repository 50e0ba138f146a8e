#include "atlas/springer.h"

#include "atlas/errors.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace atlas {

const char* const kG2IrrepNames[6] = {"phi{1,0}",  "phi{1,6}", "phi{1,3}'",
                                      "phi{1,3}''", "phi{2,1}", "phi{2,2}"};

namespace {

Int partition_count(Int n) {
  if (n < 0) return 0;
  size_t m = static_cast<size_t>(n);
  std::vector<Int> ways(m + 1, 0);
  ways[0] = 1;
  for (size_t part = 1; part <= m; ++part)
    for (size_t s = part; s <= m; ++s) ways[s] += ways[s - part];
  return ways[m];
}

Int bipartition_count(Int n) {
  Int total = 0;
  for (Int k = 0; k <= n; ++k) total += partition_count(k) * partition_count(n - k);
  return total;
}

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Int part_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), Int(0)); }

// hook length dimension of the symmetric group irreducible of shape lam
Int symmetric_dimension(const Partition& lam) {
  Int m = part_sum(lam);
  Partition t = transpose_partition(lam);
  Int fact = 1;
  for (Int i = 2; i <= m; ++i) fact *= i;
  Int hooks = 1;
  for (size_t i = 0; i < lam.size(); ++i)
    for (Int j = 0; j < lam[i]; ++j)
      hooks *= lam[i] - j + t[static_cast<size_t>(j)] - static_cast<Int>(i) - 1;
  require(fact % hooks == 0, "hook product must divide the factorial");
  return fact / hooks;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

Int cyclic_order_a(const SimpleFactor& f, const FactorClass& fc) {
  Int g = f.center_order;
  for (Int p : fc.lambda) g = std::gcd(g, p);
  return g;
}

bool has_repeated_odd_part(const Partition& lam) {
  for (Int v : distinct_parts(lam))
    if (v % 2 != 0 && multiplicity_of(lam, v) > 1) return true;
  return false;
}

Int marks_multiplicity_sum(const Partition& lam, const std::vector<Int>& marks) {
  Int s = 0;
  for (Int p : marks) s += multiplicity_of(lam, p);
  return s;
}

// Characters of A_x for one factor class, in increasing label order. B/D
// subsets are reduced modulo complementation (representative omits the
// largest markable part); the adjoint center cut keeps the characters
// trivial on the image of -1, the spin doubling adds the central character
// of the extra component of the full cover.
std::vector<RhoLabel> rho_universe(const SimpleFactor& f, const FactorClass& fc) {
  std::vector<RhoLabel> out;
  if (f.series == 'G') {
    size_t n = fc.g2 == 3 ? 3 : 1;
    for (size_t i = 0; i < n; ++i) {
      RhoLabel r;
      r.g2 = static_cast<int>(i);
      out.push_back(r);
    }
    return out;
  }
  if (f.series == 'A') {
    Int g = cyclic_order_a(f, fc);
    for (Int a = 0; a < g; ++a) {
      RhoLabel r;
      r.a = a;
      out.push_back(r);
    }
    return out;
  }
  std::vector<Int> gens = rho_generator_parts(f, fc);
  bool half = f.series != 'C';
  bool adjoint_cut = f.series != 'B' && f.center_order == 1;
  bool spin_level = (f.series == 'B' && f.center_order == 2) ||
                    (f.series == 'D' && f.center_order == 4);
  bool spin_free = spin_level && !has_repeated_odd_part(fc.lambda);
  for (size_t mask = 0; mask < size_t(1) << gens.size(); ++mask) {
    std::vector<Int> marks;
    for (size_t i = 0; i < gens.size(); ++i)
      if (mask & size_t(1) << i) marks.push_back(gens[i]);
    if (half && !marks.empty() && marks.back() == gens.back()) continue;
    if (adjoint_cut && marks_multiplicity_sum(fc.lambda, marks) % 2 != 0) continue;
    RhoLabel r;
    r.marks = marks;
    out.push_back(r);
    if (spin_free) {
      r.spin = 1;
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- symbol combinatorics for the classical series ----

// parts sorted ascending, zero padded to the parity the series needs
std::vector<Int> padded_parts_ascending(const SimpleFactor& f, const Partition& lam) {
  std::vector<Int> asc(lam.begin(), lam.end());
  std::sort(asc.begin(), asc.end());
  size_t len = asc.size();
  bool want_odd = f.series == 'B';
  if (len % 2 != (want_odd ? 1u : 0u)) asc.insert(asc.begin(), 1, 0);
  return asc;
}

// mu_i = asc_i + i with the marked runs flipped: an even run moves both ends
// outwards; odd runs, taken in ascending order, alternately move the bottom
// end down and the top end up. An odd run toggles one entry parity, so a flip
// balances only when the odd runs pair off, and the down/up alternation is the
// pairing. Cross-run gaps are at least two, so the result stays strictly
// increasing.
std::vector<Int> flipped_mu(const std::vector<Int>& asc, const std::vector<Int>& marks) {
  std::vector<Int> mu(asc.size());
  for (size_t i = 0; i < asc.size(); ++i) mu[i] = asc[i] + static_cast<Int>(i);
  size_t odd_runs = 0;
  for (Int p : marks) {
    size_t lo = asc.size(), hi = 0;
    for (size_t i = 0; i < asc.size(); ++i)
      if (asc[i] == p) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
      }
    require(lo <= hi && lo < asc.size(), "marked part must occur in the class");
    if ((hi - lo + 1) % 2 == 0) {
      mu[lo] -= 1;
      mu[hi] += 1;
    } else if (odd_runs++ % 2 == 0) {
      mu[lo] -= 1;
    } else {
      mu[hi] += 1;
    }
  }
  for (size_t i = 0; i + 1 < mu.size(); ++i)
    require(mu[i] < mu[i + 1], "flipped entries must stay strictly increasing");
  require(mu.empty() || mu[0] >= 0, "flipped entries must stay nonnegative");
  return mu;
}

struct SplitSymbol {
  Partition alpha_pre;  // from the odd entries, before transposition
  Partition beta_pre;   // from the even entries
};

// a balanced mu splits into two strictly increasing halves whose staircase
// defects give the two partitions
bool balanced_split(char series, const std::vector<Int>& mu, SplitSymbol& out) {
  std::vector<Int> odds, evens;
  for (Int v : mu) (v % 2 != 0 ? odds : evens).push_back(v);
  size_t need_odd = series == 'B' ? (mu.size() + 1) / 2 : mu.size() / 2;
  if (odds.size() != need_odd) return false;
  auto extract = [](const std::vector<Int>& v, Int shift) {
    Partition parts;
    for (size_t i = 0; i < v.size(); ++i) {
      Int val = (v[i] - shift) / 2 - static_cast<Int>(i);
      require(val >= 0, "staircase defects must be nonnegative");
      if (val > 0) parts.push_back(val);
    }
    std::reverse(parts.begin(), parts.end());
    return parts;
  };
  out.alpha_pre = extract(odds, 1);
  out.beta_pre = extract(evens, 0);
  return true;
}

WIrrepLabel build_label(const SimpleFactor& f, const FactorClass& fc,
                        const SplitSymbol& s) {
  WIrrepLabel w;
  Partition u = transpose_partition(s.beta_pre);
  Partition v = transpose_partition(s.alpha_pre);
  if (f.series == 'D') {
    if (u == v) {
      require(fc.very_even != 0, "equal halves can only come from a very even class");
      w.d_split = fc.very_even;
    } else {
      require(fc.very_even == 0, "a very even class must give equal halves");
      if (v > u) std::swap(u, v);
    }
  }
  w.alpha = u;
  w.beta = v;
  require(part_sum(w.alpha) + part_sum(w.beta) == static_cast<Int>(f.rank),
          "label size must match the rank");
  return w;
}

bool classical_geometric(const SimpleFactor& f, const FactorClass& fc,
                         const RhoLabel& rho, WIrrepLabel& out) {
  if (rho.spin != 0) return false;  // nontrivial on the center, never geometric
  std::vector<Int> asc = padded_parts_ascending(f, fc.lambda);
  SplitSymbol s;
  if (balanced_split(f.series, flipped_mu(asc, rho.marks), s)) {
    out = build_label(f, fc, s);
    return true;
  }
  if (f.series != 'C') {
    // the stored set is one representative of a complementation class; when it
    // does not balance, its partner may. (A flipped odd run toggles one entry
    // parity, and run end parities alternate, so the two members of a class
    // never both balance in B, and balance together or not at all in D.)
    std::vector<Int> gens = rho_generator_parts(f, fc);
    std::vector<Int> comp;
    std::set_difference(gens.begin(), gens.end(), rho.marks.begin(), rho.marks.end(),
                        std::back_inserter(comp));
    if (balanced_split(f.series, flipped_mu(asc, comp), s)) {
      out = build_label(f, fc, s);
      return true;
    }
  }
  return false;
}

// image of the trivial character per G2 class, as an index into kG2IrrepNames
constexpr int kG2TrivialImage[5] = {0, 3, 5, 4, 1};

bool factor_geometric(const SimpleFactor& f, const FactorClass& fc,
                      const RhoLabel& rho, WIrrepLabel& out) {
  if (f.series == 'G') {
    WIrrepLabel w;
    if (fc.g2 == 3) {
      if (rho.g2 == 2) return false;  // the sign of S3 is cuspidal here
      w.g2 = rho.g2 == 0 ? 4 : 2;
    } else {
      require(rho.g2 == 0, "only the subregular class has extra characters");
      w.g2 = kG2TrivialImage[fc.g2];
    }
    out = w;
    return true;
  }
  if (f.series == 'A') {
    if (rho.a != 0) return false;  // central characters are never geometric
    WIrrepLabel w;
    w.alpha = transpose_partition(fc.lambda);
    out = w;
    return true;
  }
  return classical_geometric(f, fc, rho, out);
}

WIrrepLabel trivial_irrep(const SimpleFactor& f) {
  WIrrepLabel w;
  if (f.series == 'G')
    w.g2 = 0;
  else if (f.series == 'A')
    w.alpha = {static_cast<Int>(f.rank) + 1};
  else
    w.alpha = {static_cast<Int>(f.rank)};
  return w;
}

WIrrepLabel sign_irrep(const SimpleFactor& f) {
  WIrrepLabel w;
  if (f.series == 'G')
    w.g2 = 1;
  else if (f.series == 'A')
    w.alpha = Partition(f.rank + 1, 1);
  else if (f.series == 'D')
    w.alpha = Partition(f.rank, 1);
  else
    w.beta = Partition(f.rank, 1);
  return w;
}

}  // namespace

std::string to_string(const RhoLabel& r, const SimpleFactor& f) {
  if (f.series == 'G') {
    static const char* const names[3] = {"1", "r", "sgn"};
    require(r.g2 >= 0 && r.g2 < 3, "invalid G2 character label");
    return names[r.g2];
  }
  if (f.series == 'A') {
    if (r.a == 0) return "1";
    if (r.a == 1) return "w";
    return "w^" + std::to_string(r.a);
  }
  std::string s;
  if (!r.marks.empty()) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < r.marks.size(); ++i) os << (i ? "," : "") << r.marks[i];
    os << '}';
    s = os.str();
  }
  if (r.spin != 0) s += s.empty() ? "z" : "*z";
  if (s.empty()) s = "1";
  return s;
}

std::string to_string(const WIrrepLabel& w, const SimpleFactor& f) {
  if (f.series == 'G') {
    require(w.g2 >= 0 && w.g2 < 6, "invalid G2 irreducible label");
    return kG2IrrepNames[w.g2];
  }
  if (f.series == 'A') return partition_str(w.alpha);
  if (f.series == 'D') {
    std::string s = "{" + partition_str(w.alpha) + "," + partition_str(w.beta) + "}";
    if (w.d_split == 1) s += ":I";
    if (w.d_split == 2) s += ":II";
    return s;
  }
  return "(" + partition_str(w.alpha) + "," + partition_str(w.beta) + ")";
}

Int irrep_dimension(const WIrrepLabel& w, const SimpleFactor& f) {
  if (f.series == 'G') {
    static const Int dims[6] = {1, 1, 1, 1, 2, 2};
    require(w.g2 >= 0 && w.g2 < 6, "invalid G2 irreducible label");
    return dims[w.g2];
  }
  if (f.series == 'A') return symmetric_dimension(w.alpha);
  Int n = static_cast<Int>(f.rank);
  Int d = binomial(n, part_sum(w.alpha)) * symmetric_dimension(w.alpha) *
          symmetric_dimension(w.beta);
  if (f.series == 'D' && w.alpha == w.beta) {
    require(d % 2 == 0, "a split label has even unsplit dimension");
    d /= 2;
  }
  return d;
}

Int irrep_count(const SimpleFactor& f) {
  Int n = static_cast<Int>(f.rank);
  switch (f.series) {
    case 'A': return partition_count(n + 1);
    case 'B':
    case 'C': return bipartition_count(n);
    case 'D': {
      Int b = bipartition_count(n);
      return n % 2 == 0 ? (b + 3 * partition_count(n / 2)) / 2 : b / 2;
    }
    case 'G': return 6;
    default: throw invariant_error("unknown series");
  }
}

size_t SpringerTable::row_of(size_t class_index, const std::vector<RhoLabel>& rho) const {
  for (size_t r = 0; r < rows.size(); ++r)
    if (rows[r].class_index == class_index && rows[r].rho == rho) return r;
  throw invariant_error("no Springer row with the requested label");
}

size_t SpringerTable::row_of_irrep(const std::vector<WIrrepLabel>& irrep) const {
  for (size_t r = 0; r < rows.size(); ++r)
    if (rows[r].geometric && rows[r].irrep == irrep) return r;
  throw invariant_error("no geometric row carries the requested irreducible");
}

SpringerTable springer_table(const RootDatum& rd, const PseudoLevi& m,
                             const UnipotentClassList& list) {
  SpringerTable st;
  size_t nf = list.factors.size();
  std::map<std::vector<WIrrepLabel>, std::string> seen;
  for (size_t c = 0; c < list.classes.size(); ++c) {
    std::vector<std::vector<RhoLabel>> uni(nf);
    size_t total = 1;
    for (size_t i = 0; i < nf; ++i) {
      uni[i] = rho_universe(list.factors[i], list.classes[c].parts[i]);
      total *= uni[i].size();
    }
    ComponentGroupData cg = component_group(rd, m, list, c);
    require(total == cg.a_x.conjugacy_classes().size(),
            "character labels must exhaust Irr(A_x)");
    std::vector<size_t> idx(nf, 0);
    for (size_t step = 0; step < total; ++step) {
      SpringerRow row;
      row.class_index = c;
      row.rho.resize(nf);
      for (size_t i = 0; i < nf; ++i) row.rho[i] = uni[i][idx[i]];
      row.geometric = true;
      for (size_t i = 0; i < nf && row.geometric; ++i) {
        WIrrepLabel wl;
        if (factor_geometric(list.factors[i], list.classes[c].parts[i], row.rho[i], wl))
          row.irrep.push_back(wl);
        else
          row.geometric = false;
      }
      if (row.geometric) {
        ++st.geometric_count;
        std::string tag = class_label(list, c);
        for (size_t i = 0; i < list.factors.size(); ++i)
          tag += " ; " + to_string(row.rho[i], list.factors[i]) + " -> " +
                 to_string(row.irrep[i], list.factors[i]);
        auto [it, fresh] = seen.emplace(row.irrep, tag);
        if (!fresh)
          require(false, "geometric rows must carry distinct irreducibles (" +
                             it->second + " | " + tag + ")");
      } else {
        row.irrep.clear();
      }
      st.rows.push_back(std::move(row));
      for (size_t i = nf; i-- > 0;) {
        if (++idx[i] < uni[i].size()) break;
        idx[i] = 0;
      }
    }
  }
  Int expect = 1;
  for (const SimpleFactor& f : list.factors) expect *= irrep_count(f);
  require(static_cast<Int>(st.geometric_count) == expect,
          "geometric rows must count Irr of the reflection group");
  std::vector<RhoLabel> rho0(nf);
  const SpringerRow& triv = st.rows[st.row_of(list.trivial_class(), rho0)];
  const SpringerRow& reg = st.rows[st.row_of(list.regular_class(), rho0)];
  require(triv.geometric && reg.geometric, "anchor rows must be geometric");
  for (size_t i = 0; i < nf; ++i) {
    require(triv.irrep[i] == trivial_irrep(list.factors[i]),
            "the trivial class must carry the trivial character");
    require(reg.irrep[i] == sign_irrep(list.factors[i]),
            "the regular class must carry the sign character");
  }
  return st;
}

std::vector<RhoLabel> rho_apply(const UnipotentClassList& list, size_t p,
                                size_t class_index, const std::vector<RhoLabel>& rho) {
  size_t nf = list.factors.size();
  require(rho.size() == nf, "character vector must match the factor count");
  std::vector<RhoLabel> out(nf);
  for (size_t i = 0; i < nf; ++i) {
    size_t j = list.pi0_factor_image[p][i];
    RhoLabel r = rho[i];
    if (list.pi0_factor_flip[p][i] != 0 && list.factors[i].series == 'A' && r.a != 0)
      r.a = cyclic_order_a(list.factors[i], list.classes[class_index].parts[i]) - r.a;
    out[j] = r;
  }
  return out;
}

std::vector<WIrrepLabel> irrep_apply(const UnipotentClassList& list, size_t p,
                                     const std::vector<WIrrepLabel>& irrep) {
  size_t nf = list.factors.size();
  require(irrep.size() == nf, "irreducible vector must match the factor count");
  std::vector<WIrrepLabel> out(nf);
  for (size_t i = 0; i < nf; ++i) {
    size_t j = list.pi0_factor_image[p][i];
    WIrrepLabel w = irrep[i];
    if (list.pi0_factor_flip[p][i] != 0 && list.factors[i].series == 'D' &&
        w.d_split != 0)
      w.d_split = 3 - w.d_split;
    out[j] = w;
  }
  return out;
}

ExtendedSpringerTable extended_springer_table(const RootDatum& rd, const PseudoLevi& m,
                                              const UnipotentClassList& list,
                                              const SpringerTable& st) {
  (void)rd;
  ExtendedSpringerTable et;
  size_t np = m.pi0_order();
  size_t nr = st.rows.size();
  std::vector<std::vector<size_t>> act(np, std::vector<size_t>(nr));
  for (size_t p = 0; p < np; ++p)
    for (size_t r = 0; r < nr; ++r) {
      const SpringerRow& row = st.rows[r];
      size_t image = st.row_of(list.pi0_perm[p][row.class_index],
                               rho_apply(list, p, row.class_index, row.rho));
      require(st.rows[image].geometric == row.geometric,
              "the component action must preserve geometric rows");
      act[p][r] = image;
    }
  std::vector<char> done(nr, 0);
  for (size_t r = 0; r < nr; ++r) {
    if (done[r]) continue;
    ExtendedSpringerRow row;
    row.row = r;
    std::set<size_t> orb;
    for (size_t p = 0; p < np; ++p) {
      orb.insert(act[p][r]);
      if (act[p][r] == r) row.stab.push_back(p);
    }
    row.orbit.assign(orb.begin(), orb.end());
    for (size_t x : row.orbit) done[x] = 1;
    require(row.orbit.size() * row.stab.size() == np, "orbit-stabilizer mismatch");
    row.stab_group = subgroup(m.pi0.group, row.stab);
    require(row.stab_group.size() == row.stab.size(), "stabilizer must be closed");
    row.num_sigma = row.stab_group.conjugacy_classes().size();
    row.geometric = st.rows[r].geometric;
    if (row.geometric) et.geometric_extended += row.num_sigma;
    et.rows.push_back(std::move(row));
  }
  et.irr_wm = m.wa_group.conjugacy_classes().size();

  // second route: the action on the irreducibles of the reflection group
  std::vector<std::vector<WIrrepLabel>> labels;
  std::vector<size_t> label_row;
  std::map<std::vector<WIrrepLabel>, size_t> pos;
  for (size_t r = 0; r < nr; ++r)
    if (st.rows[r].geometric) {
      pos[st.rows[r].irrep] = labels.size();
      labels.push_back(st.rows[r].irrep);
      label_row.push_back(r);
    }
  std::vector<char> seen(labels.size(), 0);
  for (size_t i = 0; i < labels.size(); ++i) {
    if (seen[i]) continue;
    std::set<size_t> orb;
    std::vector<size_t> stab;
    for (size_t p = 0; p < np; ++p) {
      auto it = pos.find(irrep_apply(list, p, labels[i]));
      require(it != pos.end(), "the action must permute the irreducibles");
      orb.insert(it->second);
      if (it->second == i) stab.push_back(p);
    }
    for (size_t x : orb) seen[x] = 1;
    // both routes see the same stabilizer through the correspondence
    std::vector<size_t> row_stab;
    for (size_t p = 0; p < np; ++p)
      if (act[p][label_row[i]] == label_row[i]) row_stab.push_back(p);
    require(row_stab == stab, "the two routes must give the same stabilizer");
    FiniteGroup h = subgroup(m.pi0.group, stab);
    require(h.size() == stab.size(), "stabilizer must be closed");
    et.irrep_route += h.conjugacy_classes().size();
  }
  require(et.geometric_extended == et.irr_wm,
          "extended rows must count Irr of the full isotropy group");
  require(et.irrep_route == et.irr_wm, "both counting routes must agree");
  return et;
}

std::string to_string(const AffineSpringerParam& p, const UnipotentClassList& list) {
  std::ostringstream os;
  os << to_string(p.t) << " ; " << class_label(list, p.class_index) << " ; rho=";
  if (list.factors.empty()) os << "1";
  for (size_t i = 0; i < list.factors.size(); ++i)
    os << (i ? "x" : "") << to_string(p.rho[i], list.factors[i]);
  os << " ; sigma=" << p.sigma;
  return os.str();
}

AffineSpringerFiber affine_springer_fiber(const RootDatum& rd, const WeylGroup& w,
                                          const TorusPoint& t) {
  AffineSpringerFiber fb;
  fb.t = canonical_orbit_point(rd, w, t);
  fb.m = stabilizer(rd, w, fb.t);
  fb.classes = enumerate_unipotent_classes(rd, fb.m);
  fb.table = springer_table(rd, fb.m, fb.classes);
  fb.extended = extended_springer_table(rd, fb.m, fb.classes, fb.table);
  for (const ExtendedSpringerRow& er : fb.extended.rows) {
    if (!er.geometric) continue;
    const SpringerRow& sr = fb.table.rows[er.row];
    for (size_t s = 0; s < er.num_sigma; ++s)
      fb.params.push_back({fb.t, sr.class_index, sr.rho, s});
  }
  require(fb.params.size() == fb.extended.geometric_extended,
          "fiber size must match the extended count");
  AffineSpringerParam sph = spherical_parameter(rd, w, fb.t);
  bool found = false;
  for (const AffineSpringerParam& p : fb.params)
    found = found || (p.class_index == sph.class_index && p.rho == sph.rho &&
                      p.sigma == sph.sigma);
  require(found, "the spherical parameter must appear in its fiber");
  return fb;
}

AffineSpringerParam spherical_parameter(const RootDatum& rd, const WeylGroup& w,
                                        const TorusPoint& t) {
  AffineSpringerParam p;
  p.t = canonical_orbit_point(rd, w, t);
  PseudoLevi m = stabilizer(rd, w, p.t);
  UnipotentClassList list = enumerate_unipotent_classes(rd, m);
  p.class_index = list.trivial_class();
  p.rho.assign(list.factors.size(), RhoLabel{});
  // the trivial pair is fixed by every component, so sigma lives in Irr(pi0)
  std::vector<size_t> all(m.pi0_order());
  std::iota(all.begin(), all.end(), size_t(0));
  FiniteGroup h = subgroup(m.pi0.group, all);
  p.sigma = character_table(h).trivial_row();
  return p;
}

}  // namespace atlas
