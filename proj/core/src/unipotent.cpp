#include "atlas/unipotent.h"

#include "atlas/errors.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace atlas {

std::vector<Partition> partitions_of(Int n) {
  require(n >= 0, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(Int, Int)> rec = [&](Int rem, Int cap) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (Int p = std::min(rem, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition transpose_partition(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (Int i = 1; i <= p[0]; ++i) {
    Int c = 0;
    for (Int x : p) c += x >= i ? 1 : 0;
    t.push_back(c);
  }
  return t;
}

bool dominates(const Partition& a, const Partition& b) {
  Int ta = std::accumulate(a.begin(), a.end(), Int(0));
  Int tb = std::accumulate(b.begin(), b.end(), Int(0));
  require(ta == tb, "dominance needs partitions of the same number");
  Int sa = 0, sb = 0;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<Int> distinct_parts(const Partition& p) {
  std::vector<Int> d(p.begin(), p.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

Int multiplicity_of(const Partition& p, Int part) {
  Int c = 0;
  for (Int x : p) c += x == part ? 1 : 0;
  return c;
}

Int SimpleFactor::model_size() const {
  switch (series) {
    case 'A': return static_cast<Int>(rank) + 1;
    case 'B': return 2 * static_cast<Int>(rank) + 1;
    case 'C':
    case 'D': return 2 * static_cast<Int>(rank);
    case 'G': return 0;
  }
  throw invariant_error("unknown series");
}

const char* const kG2ClassNames[5] = {"1", "A1", "A1~", "G2(a1)", "G2"};

namespace {

const Int kG2Dims[5] = {0, 6, 8, 10, 12};
// weighted diagram on (short, long)
const Int kG2Labels[5][2] = {{0, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 2}};

Int sum_sq_transpose(const Partition& p) {
  Partition t = transpose_partition(p);
  Int s = 0;
  for (Int x : t) s += x * x;
  return s;
}

Int num_odd_parts(const Partition& p) {
  Int c = 0;
  for (Int x : p) c += x % 2 != 0 ? 1 : 0;
  return c;
}

bool all_parts_even(const Partition& p) {
  if (p.empty()) return false;
  for (Int x : p) {
    if (x % 2 != 0) return false;
  }
  return true;
}

bool valid_partition(char series, const Partition& p) {
  std::map<Int, Int> mult;
  for (Int x : p) ++mult[x];
  for (auto [v, m] : mult) {
    if ((series == 'B' || series == 'D') && v % 2 == 0 && m % 2 != 0) return false;
    if (series == 'C' && v % 2 != 0 && m % 2 != 0) return false;
  }
  return true;
}

Int factor_class_dim(const SimpleFactor& f, const FactorClass& fc) {
  if (f.series == 'G') return kG2Dims[fc.g2];
  Int n = f.model_size();
  Int ss = sum_sq_transpose(fc.lambda);
  Int odd = num_odd_parts(fc.lambda);
  switch (f.series) {
    case 'A': return n * n - ss;
    case 'B':
    case 'D': return (n * n - n) / 2 - (ss - odd) / 2;
    case 'C': return (n * n + n) / 2 - (ss + odd) / 2;
  }
  throw invariant_error("unknown series");
}

Int model_cartan_det(char series, size_t k) {
  switch (series) {
    case 'A': return static_cast<Int>(k) + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'G': return 1;
  }
  throw invariant_error("unknown series");
}

IntMat model_cartan(char series, size_t k) {
  IntMat a(k, k);
  for (size_t i = 0; i < k; ++i) a(i, i) = 2;
  auto chain = [&](size_t upto) {
    for (size_t i = 0; i + 1 < upto; ++i) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  };
  switch (series) {
    case 'A':
      chain(k);
      break;
    case 'B':
      require(k >= 2, "B needs rank >= 2");
      chain(k);
      a(k - 2, k - 1) = -2;
      break;
    case 'C':
      require(k >= 2, "C needs rank >= 2");
      chain(k);
      a(k - 1, k - 2) = -2;
      break;
    case 'D':
      require(k >= 3, "D needs rank >= 3");
      chain(k - 1);
      a(k - 2, k - 1) = 0;
      a(k - 1, k - 2) = 0;
      a(k - 3, k - 1) = -1;
      a(k - 1, k - 3) = -1;
      break;
    case 'G':
      require(k == 2, "G2 has rank 2");
      a(0, 1) = -1;
      a(1, 0) = -3;
      break;
    default:
      throw invariant_error("unknown series");
  }
  return a;
}

// Ambient factors as declared in the datum label, used only to keep the
// conventional name of a full component (a rank-2 double bond is B2 = C2 as a
// root system, so only the label remembers which family was requested).
// Dualization swaps the B and C families.
struct Declared {
  char letter;
  std::set<size_t> simples;  // ambient root indices
};

std::vector<Declared> declared_components(const RootDatum& rd) {
  const std::string& l = rd.label;
  size_t dash = l.find('-');
  std::string head = dash == std::string::npos ? l : l.substr(0, dash);
  size_t flips = 0;
  for (size_t at = dash; at != std::string::npos; at = l.find("-dual", at + 1)) {
    if (l.compare(at, 5, "-dual") == 0) ++flips;
  }
  std::vector<std::pair<char, size_t>> fs;
  size_t pos = 0;
  while (pos < head.size()) {
    char fam = head[pos];
    if (fam < 'A' || fam > 'G') return {};
    ++pos;
    size_t start = pos;
    while (pos < head.size() && std::isdigit(static_cast<unsigned char>(head[pos]))) ++pos;
    if (start == pos) return {};
    size_t r = static_cast<size_t>(std::stoul(head.substr(start, pos - start)));
    if (r == 0) return {};
    fs.emplace_back(fam, r);
    if (pos < head.size()) {
      if (head[pos] != 'x') return {};
      ++pos;
    }
  }
  size_t total = 0;
  for (auto [fam, r] : fs) total += r;
  if (total != rd.simples.size()) return {};
  std::vector<Declared> out;
  size_t off = 0;
  for (auto [fam, r] : fs) {
    char c = fam;
    if (flips % 2 == 1) {
      if (c == 'B') c = 'C';
      else if (c == 'C') c = 'B';
    }
    Declared d;
    d.letter = c;
    for (size_t i = 0; i < r; ++i) d.simples.insert(rd.simples[off + i]);
    off += r;
    out.push_back(std::move(d));
  }
  return out;
}

std::string partition_string(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

std::vector<FactorClass> factor_class_list(const SimpleFactor& f) {
  std::vector<FactorClass> out;
  if (f.series == 'G') {
    for (int i = 0; i < 5; ++i) {
      FactorClass fc;
      fc.g2 = i;
      out.push_back(fc);
    }
  } else {
    for (const Partition& p : partitions_of(f.model_size())) {
      if (!valid_partition(f.series, p)) continue;
      FactorClass fc;
      fc.lambda = p;
      if (f.series == 'D' && all_parts_even(p)) {
        fc.very_even = 1;
        out.push_back(fc);
        fc.very_even = 2;
        out.push_back(fc);
      } else {
        out.push_back(fc);
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const FactorClass& a, const FactorClass& b) {
    Int da = factor_class_dim(f, a), db = factor_class_dim(f, b);
    if (da != db) return da < db;
    return to_string(a, f) < to_string(b, f);
  });
  return out;
}

// permutation action of one isotropy-section Weyl element on the roots
const Perm& section_root_perm(const PseudoLevi& m, size_t pi0_element) {
  size_t target = m.splitting[pi0_element];
  for (size_t e = 0; e < m.wa_to_weyl.size(); ++e) {
    if (m.wa_to_weyl[e] == target) return m.wa_group.perm(e);
  }
  throw invariant_error("splitting element missing from the isotropy group");
}

struct FactorMap {
  size_t image;                 // index of the image factor
  std::vector<size_t> pos;      // standard position -> standard position
  bool swaps_fork = false;      // D only: the two fork ends are exchanged
};

FactorMap factor_map(const std::vector<SimpleFactor>& factors, size_t i, const Perm& rho) {
  const SimpleFactor& f = factors[i];
  std::set<size_t> image;
  for (size_t s : f.simples) image.insert(rho[s]);
  FactorMap out;
  out.image = factors.size();
  for (size_t j = 0; j < factors.size(); ++j) {
    std::set<size_t> js(factors[j].simples.begin(), factors[j].simples.end());
    if (js == image) {
      out.image = j;
      break;
    }
  }
  require(out.image < factors.size(), "section does not permute the factor simples");
  const SimpleFactor& g = factors[out.image];
  require(g.series == f.series && g.rank == f.rank, "section mixes factor types");
  out.pos.resize(f.rank);
  for (size_t a = 0; a < f.rank; ++a) {
    size_t t = rho[f.simples[a]];
    auto it = std::find(g.simples.begin(), g.simples.end(), t);
    require(it != g.simples.end(), "factor image mismatch");
    out.pos[a] = static_cast<size_t>(it - g.simples.begin());
  }
  size_t k = f.rank;
  switch (f.series) {
    case 'B':
    case 'C':
    case 'G':
      for (size_t a = 0; a < k; ++a) require(out.pos[a] == a, "length-preserving map must fix a B/C/G diagram");
      break;
    case 'A': {
      bool id = true, rev = true;
      for (size_t a = 0; a < k; ++a) {
        id = id && out.pos[a] == a;
        rev = rev && out.pos[a] == k - 1 - a;
      }
      require(id || rev, "unsupported diagram map on an A factor");
      break;
    }
    case 'D': {
      for (size_t a = 0; a + 2 < k; ++a) require(out.pos[a] == a, "unsupported diagram map on a D factor");
      bool id = out.pos[k - 2] == k - 2 && out.pos[k - 1] == k - 1;
      bool sw = out.pos[k - 2] == k - 1 && out.pos[k - 1] == k - 2;
      require(id || sw, "unsupported diagram map on a D factor");
      out.swaps_fork = sw;
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<SimpleFactor> split_factors(const RootDatum& rd, const Subsystem& sub) {
  const std::vector<size_t>& s = sub.simple_indices;
  size_t k = s.size();
  std::vector<SimpleFactor> out;
  if (k == 0) {
    require(sub.root_indices.empty(), "roots without simples");
    return out;
  }
  IntMat c(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) c(i, j) = rd.pairing(s[i], s[j]);

  std::vector<std::vector<size_t>> nbr(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (i != j && c(i, j) != 0) nbr[i].push_back(j);

  std::vector<int> comp_of(k, -1);
  std::vector<std::vector<size_t>> comps;
  for (size_t i = 0; i < k; ++i) {
    if (comp_of[i] >= 0) continue;
    std::vector<size_t> comp, queue{i};
    comp_of[i] = static_cast<int>(comps.size());
    while (!queue.empty()) {
      size_t x = queue.back();
      queue.pop_back();
      comp.push_back(x);
      for (size_t y : nbr[x])
        if (comp_of[y] < 0) {
          comp_of[y] = static_cast<int>(comps.size());
          queue.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }

  std::vector<Declared> declared = declared_components(rd);
  auto declared_letter = [&](const std::vector<size_t>& comp) -> char {
    std::set<size_t> fset;
    for (size_t i : comp) fset.insert(s[i]);
    for (const Declared& d : declared)
      if (d.simples == fset) return d.letter;
    return 0;
  };

  const size_t none = k;  // sentinel beyond every node index
  for (const std::vector<size_t>& comp : comps) {
    size_t kf = comp.size();
    auto deg = [&](size_t i) { return nbr[i].size(); };
    auto walk = [&](size_t leaf) {
      std::vector<size_t> path{leaf};
      size_t prev = leaf, cur = leaf;
      while (true) {
        size_t next = none;
        for (size_t y : nbr[cur])
          if (y != prev) next = y;
        if (next == none) break;
        prev = cur;
        cur = next;
        path.push_back(cur);
      }
      return path;
    };

    char series = 'A';
    std::vector<size_t> order;  // local node indices in standard diagram order
    char dl = declared_letter(comp);

    bool triple = false, dbl = false, fork = false;
    for (size_t i : comp) {
      if (deg(i) >= 3) fork = true;
      for (size_t j : comp)
        if (i != j) {
          Int b = c(i, j) * c(j, i);
          if (b == 3) triple = true;
          if (b == 2) dbl = true;
        }
    }

    if (triple) {
      require(kf == 2, "triple bond outside G2");
      series = 'G';
      size_t lo = comp[0], sh = comp[1];
      if (c(lo, sh) != -3) std::swap(lo, sh);  // want <long, short_coroot> = -3
      require(c(lo, sh) == -3, "bad G2 pairing");
      order = {sh, lo};
    } else if (dbl) {
      size_t li = none, sj = none;
      for (size_t i : comp)
        for (size_t j : comp)
          if (i != j && c(i, j) == -2) {
            li = i;  // long
            sj = j;  // short
          }
      require(li != none && sj != none, "double bond lost");
      if (kf == 2) {
        series = dl == 'C' ? 'C' : 'B';
        order = series == 'B' ? std::vector<size_t>{li, sj} : std::vector<size_t>{sj, li};
      } else {
        if (deg(sj) == 1) {
          series = 'B';
          size_t far = none;
          for (size_t i : comp)
            if (deg(i) == 1 && i != sj) far = i;
          require(far != none, "no chain end opposite the short root");
          order = walk(far);
          require(order.back() == sj, "B chain must end at the short root");
        } else {
          require(deg(li) == 1, "unsupported double-bond shape");
          series = 'C';
          size_t far = none;
          for (size_t i : comp)
            if (deg(i) == 1 && i != li) far = i;
          require(far != none, "no chain end opposite the long root");
          order = walk(far);
          require(order.back() == li, "C chain must end at the long root");
        }
      }
    } else if (fork) {
      series = 'D';
      size_t hub = none;
      for (size_t i : comp)
        if (deg(i) == 3) hub = i;
      require(hub != none, "fork without a degree-3 node");
      std::vector<std::vector<size_t>> arms;
      for (size_t y : nbr[hub]) {
        std::vector<size_t> arm{y};
        size_t prev = hub, cur = y;
        while (true) {
          size_t next = none;
          for (size_t z : nbr[cur])
            if (z != prev) next = z;
          if (next == none) break;
          prev = cur;
          cur = next;
          arm.push_back(cur);
        }
        arms.push_back(arm);
      }
      require(arms.size() == 3, "unsupported fork");
      std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return s[a.back()] < s[b.back()];
      });
      require(arms[1].size() == 1 && arms[2].size() == 1, "two arms must have length one");
      std::vector<size_t> chain = arms[0];
      std::reverse(chain.begin(), chain.end());  // far end first
      size_t e1 = arms[1][0], e2 = arms[2][0];
      if (s[e1] > s[e2]) std::swap(e1, e2);
      if (kf == 4 && s[chain[0]] > s[e1]) {
        // all three arms have length one; the smallest end starts the chain
        std::vector<size_t> ends = {chain[0], e1, e2};
        std::sort(ends.begin(), ends.end(), [&](size_t a, size_t b) { return s[a] < s[b]; });
        chain = {ends[0]};
        e1 = ends[1];
        e2 = ends[2];
      }
      order = chain;
      order.push_back(hub);
      order.push_back(e1);
      order.push_back(e2);
    } else {
      // plain chain
      if (dl == 'D' && kf == 3) {
        series = 'D';
        size_t hub = none;
        for (size_t i : comp)
          if (deg(i) == 2) hub = i;
        require(hub != none, "D3 chain without a middle node");
        std::vector<size_t> leaves;
        for (size_t i : comp)
          if (i != hub) leaves.push_back(i);
        if (s[leaves[0]] > s[leaves[1]]) std::swap(leaves[0], leaves[1]);
        order = {hub, leaves[0], leaves[1]};
      } else {
        series = 'A';
        if (kf == 1) {
          order = {comp[0]};
        } else {
          std::vector<size_t> leaves;
          for (size_t i : comp)
            if (deg(i) == 1) leaves.push_back(i);
          require(leaves.size() == 2, "chain must have two ends");
          size_t start = s[leaves[0]] < s[leaves[1]] ? leaves[0] : leaves[1];
          order = walk(start);
        }
      }
    }
    if (dl != 0 && kf >= 3 && !(dl == 'D' && kf == 3))
      require(dl == series, "declared family disagrees with the diagram");

    SimpleFactor f;
    f.series = series;
    f.rank = kf;
    for (size_t i : order) f.simples.push_back(s[i]);

    IntMat got(kf, kf);
    for (size_t i = 0; i < kf; ++i)
      for (size_t j = 0; j < kf; ++j) got(i, j) = rd.pairing(f.simples[i], f.simples[j]);
    IntMat want = model_cartan(series, kf);
    for (size_t i = 0; i < kf; ++i)
      for (size_t j = 0; j < kf; ++j)
        require(got(i, j) == want(i, j), "factor order does not match the standard diagram");

    IntMat rows(kf, rd.rank);
    for (size_t i = 0; i < kf; ++i)
      for (size_t t = 0; t < rd.rank; ++t) rows(i, t) = rd.coroots[f.simples[i]][t];
    Int prod = 1;
    for (Int d : smith_form(rows).elementary_divisors()) prod *= d;
    Int det_c = model_cartan_det(series, kf);
    require(prod > 0 && det_c % prod == 0, "coroot lattice index must divide the Cartan determinant");
    f.center_order = det_c / prod;

    out.push_back(std::move(f));
  }

  // assign every subsystem root to its factor (factors are orthogonal)
  for (size_t r : sub.root_indices) {
    size_t owner = out.size();
    for (size_t fi = 0; fi < out.size(); ++fi) {
      for (size_t sm : out[fi].simples) {
        if (dot(rd.roots[r], rd.coroots[sm]) != 0) {
          require(owner == out.size() || owner == fi, "root meets two factors");
          owner = fi;
        }
      }
    }
    require(owner < out.size(), "root orthogonal to every factor");
    out[owner].roots.push_back(r);
  }
  size_t total = 0;
  for (const SimpleFactor& f : out) total += f.roots.size();
  require(total == sub.root_indices.size(), "factor roots must cover the subsystem");
  return out;
}

std::string to_string(const FactorClass& fc, const SimpleFactor& f) {
  std::string head = std::string(1, f.series) + std::to_string(f.rank) + ":";
  if (f.series == 'G') return head + kG2ClassNames[fc.g2];
  std::string s = head + partition_string(fc.lambda);
  if (fc.very_even == 1) s += ":I";
  if (fc.very_even == 2) s += ":II";
  return s;
}

Int UnipotentClassList::num_roots() const {
  size_t n = 0;
  for (const SimpleFactor& f : factors) n += f.roots.size();
  return static_cast<Int>(n);
}

size_t UnipotentClassList::trivial_class() const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].dim_orbit == 0) return i;
  throw invariant_error("no trivial class");
}

size_t UnipotentClassList::regular_class() const {
  Int top = num_roots();
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].dim_orbit == top) return i;
  throw invariant_error("no regular class");
}

std::string class_label(const UnipotentClassList& list, size_t index) {
  require(index < list.classes.size(), "class index out of range");
  if (list.factors.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < list.factors.size(); ++i) {
    if (i) s += "x";
    s += to_string(list.classes[index].parts[i], list.factors[i]);
  }
  return s;
}

size_t find_class(const UnipotentClassList& list, const std::string& label) {
  for (size_t i = 0; i < list.classes.size(); ++i)
    if (class_label(list, i) == label) return i;
  throw config_error("no unipotent class labelled '" + label + "'");
}

UnipotentClassList enumerate_unipotent_classes(const RootDatum& rd, const PseudoLevi& m) {
  UnipotentClassList list;
  list.factors = split_factors(rd, m.sub);
  size_t nf = list.factors.size();

  std::vector<std::vector<FactorClass>> per(nf);
  for (size_t i = 0; i < nf; ++i) per[i] = factor_class_list(list.factors[i]);

  std::vector<size_t> idx(nf, 0);
  bool done = false;
  while (!done) {
    UnipotentClass c;
    c.parts.resize(nf);
    for (size_t i = 0; i < nf; ++i) c.parts[i] = per[i][idx[i]];
    c.dim_orbit = 0;
    for (size_t i = 0; i < nf; ++i) c.dim_orbit += factor_class_dim(list.factors[i], c.parts[i]);
    list.classes.push_back(std::move(c));
    done = true;
    for (size_t at = nf; at-- > 0;) {
      if (++idx[at] < per[at].size()) {
        done = false;
        break;
      }
      idx[at] = 0;
    }
  }

  Int total_roots = list.num_roots();
  for (UnipotentClass& c : list.classes) c.d_x = total_roots - c.dim_orbit;

  std::sort(list.classes.begin(), list.classes.end(),
            [&](const UnipotentClass& a, const UnipotentClass& b) {
              if (a.dim_orbit != b.dim_orbit) return a.dim_orbit < b.dim_orbit;
              for (size_t i = 0; i < nf; ++i) {
                std::string sa = to_string(a.parts[i], list.factors[i]);
                std::string sb = to_string(b.parts[i], list.factors[i]);
                if (sa != sb) return sa < sb;
              }
              return false;
            });

  std::map<std::string, size_t> by_label;
  for (size_t i = 0; i < list.classes.size(); ++i) {
    bool fresh = by_label.emplace(class_label(list, i), i).second;
    require(fresh, "duplicate unipotent class label");
  }

  list.pi0_perm.resize(m.pi0_order());
  list.pi0_factor_image.resize(m.pi0_order());
  list.pi0_factor_flip.resize(m.pi0_order());
  for (size_t p = 0; p < m.pi0_order(); ++p) {
    std::vector<size_t>& row = list.pi0_perm[p];
    row.resize(list.classes.size());
    if (nf == 0) {
      for (size_t ci = 0; ci < row.size(); ++ci) row[ci] = ci;
      continue;
    }
    const Perm& rho = section_root_perm(m, p);
    std::vector<FactorMap> maps;
    for (size_t i = 0; i < nf; ++i) maps.push_back(factor_map(list.factors, i, rho));
    for (size_t i = 0; i < nf; ++i) {
      list.pi0_factor_image[p].push_back(maps[i].image);
      bool flip = maps[i].swaps_fork;
      if (list.factors[i].series == 'A')
        for (size_t a = 0; a < maps[i].pos.size(); ++a) flip = flip || maps[i].pos[a] != a;
      list.pi0_factor_flip[p].push_back(flip ? 1 : 0);
    }
    for (size_t ci = 0; ci < list.classes.size(); ++ci) {
      std::vector<FactorClass> image(nf);
      for (size_t i = 0; i < nf; ++i) {
        FactorClass fc = list.classes[ci].parts[i];
        if (maps[i].swaps_fork && fc.very_even != 0) fc.very_even = 3 - fc.very_even;
        image[maps[i].image] = fc;
      }
      std::string lab;
      for (size_t i = 0; i < nf; ++i) {
        if (i) lab += "x";
        lab += to_string(image[i], list.factors[i]);
      }
      auto it = by_label.find(lab);
      require(it != by_label.end(), "class image escapes the class list");
      row[ci] = it->second;
    }
    std::vector<bool> seen(row.size(), false);
    for (size_t v : row) {
      require(!seen[v], "component action is not a permutation");
      seen[v] = true;
    }
  }
  for (size_t p = 0; p < m.pi0_order(); ++p)
    for (size_t q = 0; q < m.pi0_order(); ++q) {
      size_t pq = m.pi0.group.mult(p, q);
      for (size_t ci = 0; ci < list.classes.size(); ++ci)
        require(list.pi0_perm[pq][ci] == list.pi0_perm[p][list.pi0_perm[q][ci]],
                "component action is not a group action");
    }
  return list;
}

ClosureRelation closure_order(const UnipotentClassList& list, size_t c1, size_t c2) {
  require(c1 < list.classes.size() && c2 < list.classes.size(), "class index out of range");
  if (c1 == c2) return ClosureRelation::equal;
  bool le = true, ge = true;
  for (size_t i = 0; i < list.factors.size(); ++i) {
    const FactorClass& a = list.classes[c1].parts[i];
    const FactorClass& b = list.classes[c2].parts[i];
    bool fle, fge;
    if (list.factors[i].series == 'G') {
      fle = a.g2 <= b.g2;
      fge = a.g2 >= b.g2;
    } else if (a.lambda == b.lambda) {
      bool same = a.very_even == b.very_even;
      fle = same;
      fge = same;
    } else {
      fle = dominates(b.lambda, a.lambda);
      fge = dominates(a.lambda, b.lambda);
    }
    le = le && fle;
    ge = ge && fge;
  }
  if (le && ge) return ClosureRelation::equal;
  if (le) return ClosureRelation::less;
  if (ge) return ClosureRelation::greater;
  return ClosureRelation::incomparable;
}

Int WeightedDynkin::label_at(size_t root_index) const {
  for (auto [r, v] : labels)
    if (r == root_index) return v;
  throw invariant_error("no weight label at this root");
}

WeightedDynkin weighted_dynkin(const RootDatum& rd, const UnipotentClassList& list,
                               size_t index) {
  require(index < list.classes.size(), "class index out of range");
  WeightedDynkin wd;
  wd.cocharacter.assign(rd.rank, Rat(0));

  for (size_t fi = 0; fi < list.factors.size(); ++fi) {
    const SimpleFactor& f = list.factors[fi];
    const FactorClass& fc = list.classes[index].parts[fi];
    size_t k = f.rank;
    std::vector<Int> lab(k, 0);
    if (f.series == 'G') {
      lab[0] = kG2Labels[fc.g2][0];
      lab[1] = kG2Labels[fc.g2][1];
    } else {
      std::vector<Int> w;
      for (Int p : fc.lambda)
        for (Int v = p - 1; v >= 1 - p; v -= 2) w.push_back(v);
      std::sort(w.rbegin(), w.rend());
      switch (f.series) {
        case 'A':
          for (size_t a = 0; a < k; ++a) lab[a] = w[a] - w[a + 1];
          break;
        case 'B':
          for (size_t a = 0; a + 1 < k; ++a) lab[a] = w[a] - w[a + 1];
          lab[k - 1] = w[k - 1];
          break;
        case 'C':
          for (size_t a = 0; a + 1 < k; ++a) lab[a] = w[a] - w[a + 1];
          lab[k - 1] = 2 * w[k - 1];
          break;
        case 'D':
          for (size_t a = 0; a + 2 < k; ++a) lab[a] = w[a] - w[a + 1];
          lab[k - 2] = w[k - 2] - w[k - 1];
          lab[k - 1] = w[k - 2] + w[k - 1];
          if (fc.very_even == 2) std::swap(lab[k - 2], lab[k - 1]);
          break;
      }
    }
    for (Int v : lab) require(v >= 0 && v <= 2, "weighted diagram labels must be 0, 1 or 2");

    // h = sum c_j coroot_j with Cartan * c = labels, by Cramer
    IntMat cm(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) cm(i, j) = rd.pairing(f.simples[i], f.simples[j]);
    Int dc = det(cm);
    require(dc != 0, "degenerate factor Cartan");
    for (size_t j = 0; j < k; ++j) {
      IntMat cj = cm;
      for (size_t i = 0; i < k; ++i) cj(i, j) = lab[i];
      Rat c(det(cj), dc);
      const IVec& gamma = rd.coroots[f.simples[j]];
      for (size_t t = 0; t < rd.rank; ++t) wd.cocharacter[t] = wd.cocharacter[t] + c * Rat(gamma[t]);
    }
    for (size_t a = 0; a < k; ++a) wd.labels.emplace_back(f.simples[a], lab[a]);
  }

  auto pair_h = [&](size_t r) {
    Rat v(0);
    for (size_t t = 0; t < rd.rank; ++t) v = v + Rat(rd.roots[r][t]) * wd.cocharacter[t];
    return v;
  };
  for (auto [r, v] : wd.labels) require(pair_h(r) == Rat(v), "cocharacter misses its labels");
  Int zeros = 0, ones = 0;
  for (const SimpleFactor& f : list.factors)
    for (size_t r : f.roots) {
      Rat v = pair_h(r);
      require(v.denominator() == 1, "cocharacter must be integral on the factor roots");
      if (v == Rat(0)) ++zeros;
      if (v == Rat(1)) ++ones;
    }
  require(list.classes[index].dim_orbit == list.num_roots() - zeros - ones,
          "orbit dimension disagrees with the cocharacter");
  return wd;
}

std::vector<Int> rho_generator_parts(const SimpleFactor& f, const FactorClass& fc) {
  std::vector<Int> out;
  if (f.series == 'B' || f.series == 'D') {
    for (Int v : distinct_parts(fc.lambda))
      if (v % 2 != 0) out.push_back(v);
  } else if (f.series == 'C') {
    for (Int v : distinct_parts(fc.lambda))
      if (v % 2 == 0) out.push_back(v);
  }
  return out;
}

ComponentGroupData component_group(const RootDatum& rd, const PseudoLevi& m,
                                   const UnipotentClassList& list, size_t index) {
  (void)rd;
  require(index < list.classes.size(), "class index out of range");
  ComponentGroupData out;
  std::vector<FiniteGroup> pieces;

  for (size_t fi = 0; fi < list.factors.size(); ++fi) {
    const SimpleFactor& f = list.factors[fi];
    const FactorClass& fc = list.classes[index].parts[fi];
    if (f.series == 'G') {
      if (fc.g2 == 3) {
        pieces.push_back(FiniteGroup::symmetric(3));
        out.a_x_order *= 6;
      }
      continue;
    }
    if (f.series == 'A') {
      Int g = f.center_order;
      for (Int p : fc.lambda) g = std::gcd(g, p);
      if (g > 1) {
        pieces.push_back(FiniteGroup::cyclic(static_cast<size_t>(g)));
        out.a_x_order *= g;
      }
      continue;
    }
    std::vector<Int> gens = rho_generator_parts(f, fc);
    size_t e = 0;
    if (f.series == 'C') {
      e = gens.size();
      if (f.center_order == 1) {
        // center cut: the central -1 lies in the component marked by the
        // odd-multiplicity even parts
        bool nonzero = false;
        for (Int p : gens) nonzero = nonzero || multiplicity_of(fc.lambda, p) % 2 != 0;
        if (nonzero) --e;
      }
    } else {
      // B and D: the orthogonal-group component group modulo the center
      e = gens.empty() ? 0 : gens.size() - 1;
      bool sc = (f.series == 'B' && f.center_order == 2) || (f.series == 'D' && f.center_order == 4);
      if (sc) {
        // the spin cover adds a central component iff no odd part repeats
        bool repeat = false;
        for (Int p : gens) repeat = repeat || multiplicity_of(fc.lambda, p) >= 2;
        if (!repeat) ++e;
      }
      if (f.series == 'D' && f.center_order == 1 && e > 0) {
        // center cut for the even orthogonal quotient: -1 flips every block,
        // landing in the component marked by the odd-multiplicity odd parts
        bool nonzero = false;
        for (Int p : gens) nonzero = nonzero || multiplicity_of(fc.lambda, p) % 2 != 0;
        if (nonzero) --e;
      }
    }
    for (size_t i = 0; i < e; ++i) pieces.push_back(FiniteGroup::cyclic(2));
    out.a_x_order *= Int(1) << e;
  }

  out.a_x = FiniteGroup::trivial();
  for (const FiniteGroup& g : pieces) out.a_x = direct_product(out.a_x, g);
  require(static_cast<Int>(out.a_x.size()) == out.a_x_order, "component group size mismatch");

  for (size_t p = 0; p < m.pi0_order(); ++p)
    if (list.pi0_perm[p][index] == index) out.pi0_stab.push_back(p);
  out.pi0_zmx_order = out.a_x_order * static_cast<Int>(out.pi0_stab.size());
  return out;
}

std::vector<size_t> bala_carter_support(const RootDatum& rd, const UnipotentClassList& list,
                                        size_t index) {
  (void)rd;
  require(index < list.classes.size(), "class index out of range");
  std::vector<size_t> out;
  for (size_t fi = 0; fi < list.factors.size(); ++fi) {
    const SimpleFactor& f = list.factors[fi];
    const FactorClass& fc = list.classes[index].parts[fi];
    std::vector<size_t> model;  // 0-based standard simple positions
    size_t k = f.rank;
    if (f.series == 'G') {
      switch (fc.g2) {
        case 0: break;
        case 1: model = {1}; break;  // long root sl2
        case 2: model = {0}; break;  // short root sl2
        default: model = {0, 1}; break;
      }
    } else if (f.series == 'A') {
      size_t off = 0;
      for (Int p : fc.lambda) {
        for (size_t a = off; a + 1 < off + static_cast<size_t>(p); ++a) model.push_back(a);
        off += static_cast<size_t>(p);
      }
      require(off == k + 1, "block sizes must fill the coordinates");
    } else {
      std::vector<Int> blocks, tail;
      std::map<Int, Int, std::greater<Int>> mult;
      for (Int v : fc.lambda) ++mult[v];
      for (auto [v, mm] : mult) {
        for (Int i = 0; i < mm / 2; ++i) blocks.push_back(v);
        if (mm % 2 != 0) tail.push_back(v);
      }
      Int tail_sum = std::accumulate(tail.begin(), tail.end(), Int(0));
      size_t r = static_cast<size_t>((tail_sum - (f.series == 'B' ? 1 : 0)) / 2);
      size_t off = 0;
      for (Int p : blocks) {
        for (size_t a = off; a + 1 < off + static_cast<size_t>(p); ++a) model.push_back(a);
        off += static_cast<size_t>(p);
      }
      require(off + r == k, "pair blocks and tail must fill the coordinates");
      if (f.series == 'D' && fc.very_even == 2) {
        require(r == 0 && !model.empty() && model.back() == k - 2, "bad very even block layout");
        model.back() = k - 1;
      }
      if (r > 0) {
        require(f.series != 'D' || r >= 2, "a D tail needs at least two coordinates");
        for (size_t a = off; a + 1 < k; ++a) model.push_back(a);
        model.push_back(k - 1);
      }
    }
    for (size_t a : model) out.push_back(f.simples[a]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TqPoint::is_plain() const {
  for (const Rat& x : h)
    if (!(x == Rat(0))) return false;
  return true;
}

TqPoint t_q_point(const TorusPoint& t, const WeightedDynkin& wd) {
  require(t.v.size() == wd.cocharacter.size(), "rank mismatch");
  return TqPoint{t, wd.cocharacter};
}

std::string to_string(const TqPoint& p) {
  if (p.is_plain()) return to_string(p.t);
  QVec half(p.h.size());
  for (size_t i = 0; i < p.h.size(); ++i) half[i] = p.h[i] * Rat(1, 2);
  return to_string(p.t) + "*q^" + to_string(half);
}

}  // namespace atlas
