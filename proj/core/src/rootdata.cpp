#include "atlas/rootdata.h"

#include "atlas/errors.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace atlas {

namespace {

// Cartan matrix block for one simple factor, entries (i,j) = <alpha_i, alpha_j^vee>.
// Conventions: B_n has a short last root, C_n a long last root, D_n forks at
// the end, G2 has a short first root.
IntMat cartan_block(char family, size_t n) {
  IntMat a(n, n);
  for (size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto chain = [&](size_t upto) {
    for (size_t i = 0; i + 1 < upto; ++i) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  };
  switch (family) {
    case 'A':
      chain(n);
      break;
    case 'B':
      if (n < 2) throw config_error("B_n needs rank >= 2 (B1 is A1)");
      chain(n);
      a(n - 2, n - 1) = -2;  // <alpha_{n-1}, alpha_n^vee> with alpha_n short
      break;
    case 'C':
      if (n < 2) throw config_error("C_n needs rank >= 2 (C1 is A1)");
      chain(n);
      a(n - 1, n - 2) = -2;  // <alpha_n, alpha_{n-1}^vee> with alpha_n long
      break;
    case 'D':
      if (n < 2) throw config_error("D_n needs rank >= 2");
      chain(n - 1);
      if (n >= 3) {
        a(n - 1, n - 3) = -1;
        a(n - 3, n - 1) = -1;
      }
      break;
    case 'G':
      if (n != 2) throw config_error("only G2 exists in family G");
      a(0, 1) = -1;  // alpha_1 short
      a(1, 0) = -3;
      break;
    default:
      throw config_error("unsupported Cartan family");
  }
  return a;
}

struct ParsedType {
  std::vector<std::pair<char, size_t>> factors;
  size_t total_rank = 0;
};

ParsedType parse_type_label(const std::string& label) {
  ParsedType out;
  size_t pos = 0;
  while (pos < label.size()) {
    char fam = label[pos];
    if (fam < 'A' || fam > 'G' || fam == 'E' || fam == 'F')
      throw config_error("unsupported Cartan type in '" + label + "'");
    ++pos;
    size_t start = pos;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (start == pos) throw config_error("missing rank in type label '" + label + "'");
    size_t r = static_cast<size_t>(std::stoul(label.substr(start, pos - start)));
    if (r == 0 || r > 8) throw config_error("rank out of range 1..8 in '" + label + "'");
    if (fam == 'A' && r > 8) throw config_error("rank out of range");
    out.factors.emplace_back(fam, r);
    out.total_rank += r;
    if (pos < label.size()) {
      if (label[pos] != 'x') throw config_error("expected 'x' between factors in '" + label + "'");
      ++pos;
      if (pos == label.size()) throw config_error("trailing 'x' in type label");
    }
  }
  if (out.factors.empty()) throw config_error("empty type label");
  return out;
}

IntMat block_cartan(const ParsedType& t) {
  IntMat a(t.total_rank, t.total_rank);
  size_t off = 0;
  for (auto [fam, r] : t.factors) {
    IntMat b = cartan_block(fam, r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) a(off + i, off + j) = b(i, j);
    off += r;
  }
  return a;
}

// Generate the full root/coroot list from the simple pairs by closing under
// simple reflections, acting on both sides of each pair at once.
void close_roots(std::vector<IVec>& roots, std::vector<IVec>& coroots) {
  size_t nsimple = roots.size();
  std::map<IVec, size_t> seen;
  for (size_t i = 0; i < roots.size(); ++i) seen[roots[i]] = i;
  for (size_t head = 0; head < roots.size(); ++head) {
    for (size_t j = 0; j < nsimple; ++j) {
      Int pr = dot(roots[head], coroots[j]);
      Int pc = dot(roots[j], coroots[head]);
      IVec nr = roots[head];
      IVec nc = coroots[head];
      for (size_t k = 0; k < nr.size(); ++k) {
        nr[k] -= pr * roots[j][k];
        nc[k] -= pc * coroots[j][k];
      }
      if (!seen.count(nr)) {
        seen[nr] = roots.size();
        roots.push_back(nr);
        coroots.push_back(nc);
      }
    }
  }
}

}  // namespace

Int RootDatum::height(size_t i) const {
  Int h = 0;
  for (Int c : simple_coords[i]) h += c;
  return h;
}

std::optional<size_t> RootDatum::root_index(const IVec& x) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == x) return i;
  return std::nullopt;
}

IntMat RootDatum::cartan() const {
  size_t n = simples.size();
  IntMat a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a(i, j) = pairing(simples[i], simples[j]);
  return a;
}

IVec RootDatum::two_rho() const {
  IVec s(rank, 0);
  for (size_t i = 0; i < num_positive(); ++i)
    for (size_t k = 0; k < rank; ++k) s[k] += roots[i][k];
  return s;
}

size_t RootDatum::highest_root() const {
  require(!roots.empty(), "no roots");
  size_t best = 0;
  for (size_t i = 1; i < num_positive(); ++i)
    if (height(i) > height(best)) best = i;
  return best;
}

IVec RootDatum::reflect(const IVec& x, size_t root_i) const {
  Int p = dot(x, coroots[root_i]);
  IVec out = x;
  for (size_t k = 0; k < rank; ++k) out[k] -= p * roots[root_i][k];
  return out;
}

RootDatum build_root_datum(const std::string& type_label, const std::string& isogeny,
                           const std::vector<IVec>& lattice) {
  ParsedType pt = parse_type_label(type_label);
  size_t n = pt.total_rank;
  IntMat a = block_cartan(pt);

  // Simple pairs in the simply connected model: X has the fundamental-weight
  // basis, so alpha_j has coordinates (a(j, 0), ..., a(j, n-1)) and the
  // coroots are the standard basis of Y.
  std::vector<IVec> sc_roots(n), sc_coroots(n);
  for (size_t j = 0; j < n; ++j) {
    sc_roots[j] = a.row(j);
    sc_coroots[j] = IVec(n, 0);
    sc_coroots[j][j] = 1;
  }

  std::vector<IVec> roots, coroots;
  if (isogeny == "sc") {
    require(lattice.empty(), "sc isogeny takes no lattice");
    roots = sc_roots;
    coroots = sc_coroots;
  } else if (isogeny == "ad") {
    require(lattice.empty(), "ad isogeny takes no lattice");
    roots.assign(n, IVec(n, 0));
    coroots.assign(n, IVec(n, 0));
    for (size_t j = 0; j < n; ++j) {
      roots[j][j] = 1;
      for (size_t i = 0; i < n; ++i) coroots[j][i] = a(i, j);
    }
  } else if (isogeny == "explicit") {
    require(lattice.size() == n, "explicit lattice needs rank many rows");
    IntMat l(n, n);
    for (size_t i = 0; i < n; ++i) {
      require(lattice[i].size() == n, "explicit lattice rows must have full rank length");
      for (size_t j = 0; j < n; ++j) l(i, j) = lattice[i][j];
    }
    if (det(l) == 0) throw config_error("explicit lattice is degenerate");
    // Basis rows in weight coordinates; a root alpha lies in the lattice iff
    // L^T x = alpha has an integral solution, and those x are its new
    // coordinates. Coroot coordinates in the dual basis are L * alpha^vee.
    IntMat lt = l.transposed();
    roots.resize(n);
    coroots.resize(n);
    for (size_t j = 0; j < n; ++j) {
      QVec x;
      if (!solve(lt, QVec(sc_roots[j].begin(), sc_roots[j].end()), x) || !is_integral(x))
        throw config_error("explicit lattice does not contain the root lattice");
      IVec xi(n);
      for (size_t k = 0; k < n; ++k) xi[k] = x[k].numerator();
      roots[j] = xi;
      coroots[j] = l.apply(sc_coroots[j]);
    }
  } else {
    throw config_error("isogeny must be sc, ad or explicit");
  }

  close_roots(roots, coroots);

  RootDatum rd;
  rd.rank = n;
  rd.label = type_label + "-" + isogeny;

  // Express every root over the simple system to get heights and signs.
  IntMat simple_mat(n, n);  // columns are simple roots
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) simple_mat(i, j) = roots[j][i];
  std::vector<IVec> coords(roots.size());
  for (size_t r = 0; r < roots.size(); ++r) {
    QVec x;
    require(solve(simple_mat, QVec(roots[r].begin(), roots[r].end()), x) && is_integral(x),
            "root does not lie in the simple-root lattice");
    IVec c(n);
    bool pos = false, neg = false;
    for (size_t k = 0; k < n; ++k) {
      c[k] = x[k].numerator();
      pos |= c[k] > 0;
      neg |= c[k] < 0;
    }
    require(pos != neg, "root has mixed signs over the simple system");
    coords[r] = c;
  }

  // Canonical order: positives by (height, first support, lex), negatives
  // mirrored so that negative_of is index + num_positive.
  std::vector<size_t> pos_idx;
  for (size_t r = 0; r < roots.size(); ++r) {
    Int h = std::accumulate(coords[r].begin(), coords[r].end(), Int(0));
    if (h > 0) pos_idx.push_back(r);
  }
  auto key_less = [&](size_t x, size_t y) {
    Int hx = std::accumulate(coords[x].begin(), coords[x].end(), Int(0));
    Int hy = std::accumulate(coords[y].begin(), coords[y].end(), Int(0));
    if (hx != hy) return hx < hy;
    size_t sx = 0, sy = 0;
    while (coords[x][sx] == 0) ++sx;
    while (coords[y][sy] == 0) ++sy;
    if (sx != sy) return sx < sy;
    return coords[x] < coords[y];
  };
  std::sort(pos_idx.begin(), pos_idx.end(), key_less);
  require(pos_idx.size() * 2 == roots.size(), "asymmetric root order");

  auto neg = [&](const IVec& v) {
    IVec o(v.size());
    for (size_t k = 0; k < v.size(); ++k) o[k] = -v[k];
    return o;
  };
  for (size_t r : pos_idx) {
    rd.roots.push_back(roots[r]);
    rd.coroots.push_back(coroots[r]);
    rd.simple_coords.push_back(coords[r]);
  }
  for (size_t r : pos_idx) {
    rd.roots.push_back(neg(roots[r]));
    rd.coroots.push_back(neg(coroots[r]));
    rd.simple_coords.push_back(neg(coords[r]));
  }
  for (size_t j = 0; j < n; ++j) {
    IVec e(n, 0);
    e[j] = 1;
    bool found = false;
    for (size_t r = 0; r < rd.roots.size(); ++r)
      if (rd.simple_coords[r] == e) {
        rd.simples.push_back(r);
        found = true;
        break;
      }
    require(found, "lost a simple root while sorting");
  }

  for (size_t r = 0; r < rd.roots.size(); ++r)
    require(dot(rd.roots[r], rd.coroots[r]) == 2, "<alpha, alpha^vee> must be 2");
  return rd;
}

RootDatum dual_datum(const RootDatum& rd) {
  // Rebuild from the dual simple pairs: coroot heights differ from root
  // heights in general, so the canonical order must be recomputed.
  std::vector<IVec> simple_roots, simple_coroots;
  for (size_t s : rd.simples) {
    simple_roots.push_back(rd.coroots[s]);
    simple_coroots.push_back(rd.roots[s]);
  }
  std::vector<IVec> all_r = simple_roots, all_c = simple_coroots;
  close_roots(all_r, all_c);
  require(all_r.size() == rd.roots.size(), "dual system size mismatch");
  RootDatum out;
  out.rank = rd.rank;
  out.label = rd.label + "-dual";
  size_t n = rd.simples.size();
  IntMat simple_mat(rd.rank, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < rd.rank; ++i) simple_mat(i, j) = simple_roots[j][i];
  std::vector<IVec> coords(all_r.size());
  std::vector<size_t> pos_idx;
  for (size_t r = 0; r < all_r.size(); ++r) {
    QVec x;
    require(solve(simple_mat, QVec(all_r[r].begin(), all_r[r].end()), x) && is_integral(x),
            "dual root outside simple lattice");
    IVec c(n);
    Int h = 0;
    for (size_t k = 0; k < n; ++k) {
      c[k] = x[k].numerator();
      h += c[k];
    }
    coords[r] = c;
    if (h > 0) pos_idx.push_back(r);
  }
  auto key_less = [&](size_t x, size_t y) {
    Int hx = std::accumulate(coords[x].begin(), coords[x].end(), Int(0));
    Int hy = std::accumulate(coords[y].begin(), coords[y].end(), Int(0));
    if (hx != hy) return hx < hy;
    size_t sx = 0, sy = 0;
    while (coords[x][sx] == 0) ++sx;
    while (coords[y][sy] == 0) ++sy;
    if (sx != sy) return sx < sy;
    return coords[x] < coords[y];
  };
  std::sort(pos_idx.begin(), pos_idx.end(), key_less);
  auto neg = [&](const IVec& v) {
    IVec o(v.size());
    for (size_t k = 0; k < v.size(); ++k) o[k] = -v[k];
    return o;
  };
  for (size_t r : pos_idx) {
    out.roots.push_back(all_r[r]);
    out.coroots.push_back(all_c[r]);
    out.simple_coords.push_back(coords[r]);
  }
  for (size_t r : pos_idx) {
    out.roots.push_back(neg(all_r[r]));
    out.coroots.push_back(neg(all_c[r]));
    out.simple_coords.push_back(neg(coords[r]));
  }
  for (size_t j = 0; j < n; ++j) {
    IVec e(n, 0);
    e[j] = 1;
    for (size_t r = 0; r < out.roots.size(); ++r)
      if (out.simple_coords[r] == e) {
        out.simples.push_back(r);
        break;
      }
  }
  require(out.simples.size() == n, "dual simple system lost");
  return out;
}

size_t weyl_order_bound() {
  const char* env = std::getenv("ATLAS_MAX_W");
  if (!env || !*env) return 1'000'000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) throw config_error("ATLAS_MAX_W must be a positive integer");
  return static_cast<size_t>(v);
}

WeylGroup::WeylGroup(const RootDatum& rd, std::vector<WeylElement> elts)
    : rd_(&rd), elts_(std::move(elts)) {
  order_.resize(elts_.size());
  for (size_t i = 0; i < elts_.size(); ++i) order_[i] = i;
  std::sort(order_.begin(), order_.end(),
            [&](size_t x, size_t y) { return elts_[x].perm < elts_[y].perm; });
  id_ = 0;
  for (size_t i = 0; i < elts_.size(); ++i)
    if (elts_[i].length == 0) id_ = i;
  inv_.assign(elts_.size(), 0);
  for (size_t i = 0; i < elts_.size(); ++i) {
    // invert the permutation and look it up
    std::vector<size_t> ip(elts_[i].perm.size());
    for (size_t r = 0; r < ip.size(); ++r) ip[elts_[i].perm[r]] = r;
    inv_[i] = index_of_perm(ip);
  }
  refl_.assign(rd.roots.size(), 0);
  for (size_t r = 0; r < rd.roots.size(); ++r) {
    std::vector<size_t> p(rd.roots.size());
    for (size_t x = 0; x < rd.roots.size(); ++x) {
      auto idx = rd.root_index(rd.reflect(rd.roots[x], r));
      require(idx.has_value(), "reflection left the root system");
      p[x] = *idx;
    }
    refl_[r] = index_of_perm(p);
  }
  simple_refl_.clear();
  for (size_t j = 0; j < rd.simples.size(); ++j) simple_refl_.push_back(refl_[rd.simples[j]]);
}

size_t WeylGroup::mult(size_t i, size_t j) const {
  const auto& pi = elts_[i].perm;
  const auto& pj = elts_[j].perm;
  std::vector<size_t> p(pi.size());
  for (size_t r = 0; r < p.size(); ++r) p[r] = pi[pj[r]];
  return index_of_perm(p);
}

size_t WeylGroup::inverse(size_t i) const { return inv_[i]; }

size_t WeylGroup::index_of_perm(const std::vector<size_t>& p) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), p,
                             [&](size_t x, const std::vector<size_t>& q) { return elts_[x].perm < q; });
  require(it != order_.end() && elts_[*it].perm == p, "permutation not in the group");
  return *it;
}

IntMat WeylGroup::y_matrix(size_t i) const { return elts_[inv_[i]].mat.transposed(); }

QVec WeylGroup::act_y(size_t i, const QVec& y) const { return y_matrix(i).apply(y); }

IVec poincare_polynomial(const WeylGroup& w) {
  size_t maxlen = 0;
  for (size_t i = 0; i < w.size(); ++i) maxlen = std::max(maxlen, w[i].length);
  IVec p(maxlen + 1, 0);
  for (size_t i = 0; i < w.size(); ++i) ++p[w[i].length];
  return p;
}

WeylGroup generate_weyl(const RootDatum& rd) {
  size_t bound = weyl_order_bound();
  size_t n = rd.rank;
  size_t nroots = rd.roots.size();
  // simple reflection data
  std::vector<WeylElement> gens;
  for (size_t s : rd.simples) {
    WeylElement e;
    e.mat = IntMat(n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < n; ++k)
        e.mat(i, k) = (i == k ? 1 : 0) - rd.roots[s][i] * rd.coroots[s][k];
    }
    e.perm.resize(nroots);
    for (size_t r = 0; r < nroots; ++r) {
      auto idx = rd.root_index(rd.reflect(rd.roots[r], s));
      require(idx.has_value(), "reflection left the root system");
      e.perm[r] = *idx;
    }
    e.length = 0;
    gens.push_back(std::move(e));
  }

  std::vector<WeylElement> elems;
  WeylElement id;
  id.mat = IntMat::identity(n);
  id.perm.resize(nroots);
  for (size_t r = 0; r < nroots; ++r) id.perm[r] = r;
  id.length = 0;
  elems.push_back(id);
  std::map<std::vector<size_t>, size_t> seen;
  seen[id.perm] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const WeylElement& g : gens) {
      // right multiplication: (w s)(r) = w(s(r))
      std::vector<size_t> p(nroots);
      for (size_t r = 0; r < nroots; ++r) p[r] = elems[head].perm[g.perm[r]];
      if (seen.count(p)) continue;
      if (elems.size() >= bound)
        throw config_error("Weyl group order exceeds bound (set ATLAS_MAX_W to raise)");
      WeylElement e;
      e.perm = p;
      e.mat = elems[head].mat * g.mat;
      size_t len = 0;
      for (size_t r = 0; r < rd.num_positive(); ++r)
        if (!rd.is_positive(p[r])) ++len;
      e.length = len;
      seen[p] = elems.size();
      elems.push_back(std::move(e));
    }
  }
  return WeylGroup(rd, std::move(elems));
}

Subsystem subsystem_of(const RootDatum& rd, const std::vector<size_t>& root_set) {
  Subsystem out;
  out.root_indices = root_set;
  std::sort(out.root_indices.begin(), out.root_indices.end());
  out.root_indices.erase(std::unique(out.root_indices.begin(), out.root_indices.end()),
                         out.root_indices.end());
  std::vector<char> in(rd.roots.size(), 0);
  for (size_t r : out.root_indices) in[r] = 1;
  for (size_t r : out.root_indices)
    require(in[rd.negative_of(r)], "subsystem not closed under negation");

  // positives of the subsystem in the ambient order
  std::vector<size_t> pos;
  for (size_t r : out.root_indices)
    if (rd.is_positive(r)) pos.push_back(r);

  // simple = positive and not a sum of two subsystem positives
  for (size_t r : pos) {
    bool decomposable = false;
    for (size_t x : pos) {
      if (decomposable) break;
      for (size_t y : pos) {
        if (x > y) continue;
        IVec s(rd.rank);
        for (size_t k = 0; k < rd.rank; ++k) s[k] = rd.roots[x][k] + rd.roots[y][k];
        if (s == rd.roots[r]) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) out.simple_indices.push_back(r);
  }

  // classify the Dynkin diagram of the simple system
  size_t m = out.simple_indices.size();
  if (m == 0) {
    out.type_label = "";
    return out;
  }
  // bond(i,j) = <a_i, a_j^vee> * <a_j, a_i^vee>
  std::vector<std::vector<Int>> pair_ij(m, std::vector<Int>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      pair_ij[i][j] = rd.pairing(out.simple_indices[i], out.simple_indices[j]);
  std::vector<char> used(m, 0);
  std::vector<std::string> labels;
  for (size_t start = 0; start < m; ++start) {
    if (used[start]) continue;
    // collect the connected component
    std::vector<size_t> comp{start};
    used[start] = 1;
    for (size_t h = 0; h < comp.size(); ++h)
      for (size_t j = 0; j < m; ++j)
        if (!used[j] && pair_ij[comp[h]][j] != 0) {
          used[j] = 1;
          comp.push_back(j);
        }
    size_t k = comp.size();
    auto bond = [&](size_t a, size_t b) { return pair_ij[comp[a]][comp[b]] * pair_ij[comp[b]][comp[a]]; };
    std::vector<size_t> deg(k, 0);
    size_t triple = 0, dbl = 0;
    for (size_t i2 = 0; i2 < k; ++i2)
      for (size_t j2 = 0; j2 < k; ++j2) {
        if (i2 == j2) continue;
        if (bond(i2, j2) > 0) ++deg[i2];
        if (i2 < j2 && bond(i2, j2) == 3) ++triple;
        if (i2 < j2 && bond(i2, j2) == 2) ++dbl;
      }
    std::string lbl;
    size_t maxdeg = *std::max_element(deg.begin(), deg.end());
    if (triple) {
      require(k == 2, "triple bond outside G2");
      lbl = "G2";
    } else if (dbl) {
      require(dbl == 1 && maxdeg <= 2, "unrecognized doubly laced diagram");
      // find the double bond; short side has <long, short^vee> = -2 pointing at it
      size_t si = 0, sj = 0;
      for (size_t i2 = 0; i2 < k; ++i2)
        for (size_t j2 = 0; j2 < k; ++j2)
          if (i2 != j2 && bond(i2, j2) == 2 && pair_ij[comp[i2]][comp[j2]] == -2) {
            si = i2;  // long side
            sj = j2;  // short side
          }
      // count chain length hanging off each side of the bond
      auto arm = [&](size_t from, size_t avoid) {
        size_t cnt = 0, cur = from, prev = avoid;
        while (true) {
          size_t next = k;
          for (size_t j2 = 0; j2 < k; ++j2)
            if (j2 != prev && j2 != cur && bond(cur, j2) > 0) next = j2;
          if (next == k) break;
          ++cnt;
          prev = cur;
          cur = next;
        }
        return cnt;
      };
      size_t long_arm = arm(si, sj), short_arm = arm(sj, si);
      if (k == 2) {
        lbl = "B2";  // == C2; one canonical name
      } else if (short_arm == 0) {
        lbl = "B" + std::to_string(k);
      } else if (long_arm == 0) {
        lbl = "C" + std::to_string(k);
      } else {
        require(k == 4, "interior double bond is F4 only");
        lbl = "F4";
      }
    } else if (maxdeg >= 3) {
      require(maxdeg == 3, "diagram vertex of degree > 3");
      // fork: arms decide D vs E
      size_t hub = 0;
      for (size_t i2 = 0; i2 < k; ++i2)
        if (deg[i2] == 3) hub = i2;
      std::vector<size_t> arms;
      for (size_t j2 = 0; j2 < k; ++j2) {
        if (j2 == hub || bond(hub, j2) == 0) continue;
        size_t cnt = 1, cur = j2, prev = hub;
        while (true) {
          size_t next = k;
          for (size_t t = 0; t < k; ++t)
            if (t != prev && t != cur && bond(cur, t) > 0) next = t;
          if (next == k) break;
          ++cnt;
          prev = cur;
          cur = next;
        }
        arms.push_back(cnt);
      }
      std::sort(arms.begin(), arms.end());
      require(arms.size() == 3, "fork without three arms");
      if (arms[0] == 1 && arms[1] == 1) {
        lbl = "D" + std::to_string(k);
      } else {
        require(arms[0] == 1 && arms[1] == 2 && k >= 6 && k <= 8, "unrecognized fork diagram");
        lbl = "E" + std::to_string(k);
      }
    } else {
      lbl = (k == 1) ? "A1" : "A" + std::to_string(k);
    }
    labels.push_back(lbl);
  }
  std::sort(labels.begin(), labels.end());
  std::string joined;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) joined += "x";
    joined += labels[i];
  }
  out.type_label = joined;
  return out;
}

}  // namespace atlas
