#include "atlas/fingrp.h"

#include "atlas/errors.h"

#include <algorithm>
#include <map>
#include <numeric>

namespace atlas {

Perm compose(const Perm& f, const Perm& g) {
  require(f.size() == g.size(), "composing permutations of different degree");
  Perm h(f.size());
  for (size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

Perm inverse_perm(const Perm& f) {
  Perm h(f.size());
  for (size_t x = 0; x < f.size(); ++x) h[f[x]] = x;
  return h;
}

Perm identity_perm(size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), size_t{0});
  return p;
}

void FiniteGroup::finish_init() {
  order_.resize(elems_.size());
  std::iota(order_.begin(), order_.end(), size_t{0});
  std::sort(order_.begin(), order_.end(),
            [&](size_t x, size_t y) { return elems_[x] < elems_[y]; });
  Perm id = identity_perm(degree_);
  id_ = index_of(id);
  inv_.resize(elems_.size());
  for (size_t i = 0; i < elems_.size(); ++i) inv_[i] = index_of(inverse_perm(elems_[i]));
}

FiniteGroup FiniteGroup::from_generators(size_t degree, std::vector<Perm> gens, size_t bound) {
  FiniteGroup g;
  g.degree_ = degree;
  for (const Perm& p : gens) require(p.size() == degree, "generator degree mismatch");
  g.elems_.push_back(identity_perm(degree));
  std::map<Perm, size_t> seen;
  seen[g.elems_[0]] = 0;
  for (const Perm& p : gens) {
    if (!seen.count(p)) {
      seen[p] = g.elems_.size();
      g.elems_.push_back(p);
    }
  }
  std::vector<Perm> gen_perms = gens;
  for (size_t head = 0; head < g.elems_.size(); ++head) {
    for (const Perm& p : gen_perms) {
      Perm q = compose(g.elems_[head], p);
      if (seen.count(q)) continue;
      if (g.elems_.size() >= bound) throw config_error("finite group order exceeds bound");
      seen[q] = g.elems_.size();
      g.elems_.push_back(std::move(q));
    }
  }
  g.finish_init();
  for (const Perm& p : gens) g.gens_.push_back(g.index_of(p));
  return g;
}

FiniteGroup FiniteGroup::from_elements(std::vector<Perm> elems) {
  require(!elems.empty(), "empty element list");
  FiniteGroup g;
  g.degree_ = elems[0].size();
  g.elems_ = std::move(elems);
  std::sort(g.elems_.begin(), g.elems_.end());
  g.elems_.erase(std::unique(g.elems_.begin(), g.elems_.end()), g.elems_.end());
  g.finish_init();
  for (size_t i = 0; i < g.elems_.size(); ++i)
    for (size_t j = 0; j < g.elems_.size(); ++j) {
      Perm q = compose(g.elems_[i], g.elems_[j]);
      require(g.contains(q), "element list not closed under multiplication");
    }
  for (size_t i = 0; i < g.elems_.size(); ++i) g.gens_.push_back(i);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return from_generators(1, {}); }

FiniteGroup FiniteGroup::cyclic(size_t n) {
  require(n >= 1, "cyclic group of order >= 1");
  if (n == 1) return trivial();
  Perm rot(n);
  for (size_t i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return from_generators(n, {rot});
}

FiniteGroup FiniteGroup::symmetric(size_t n) {
  require(n >= 1, "symmetric group on >= 1 points");
  if (n == 1) return trivial();
  Perm cycle(n), swap01 = identity_perm(n);
  for (size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::swap(swap01[0], swap01[1]);
  return from_generators(n, {cycle, swap01});
}

FiniteGroup FiniteGroup::dihedral(size_t n) {
  require(n >= 3, "dihedral needs n >= 3");
  Perm rot(n), flip(n);
  for (size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return from_generators(n, {rot, flip});
}

size_t FiniteGroup::mult(size_t i, size_t j) const { return index_of(compose(elems_[i], elems_[j])); }

size_t FiniteGroup::inverse(size_t i) const { return inv_[i]; }

size_t FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), p,
                             [&](size_t x, const Perm& q) { return elems_[x] < q; });
  require(it != order_.end() && elems_[*it] == p, "permutation not in the group");
  return *it;
}

bool FiniteGroup::contains(const Perm& p) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), p,
                             [&](size_t x, const Perm& q) { return elems_[x] < q; });
  return it != order_.end() && elems_[*it] == p;
}

size_t FiniteGroup::power(size_t i, Int e) const {
  size_t base = i;
  if (e < 0) {
    base = inv_[i];
    e = -e;
  }
  size_t acc = id_;
  while (e > 0) {
    if (e & 1) acc = mult(acc, base);
    base = mult(base, base);
    e >>= 1;
  }
  return acc;
}

size_t FiniteGroup::order_of(size_t i) const {
  size_t acc = i, n = 1;
  while (acc != id_) {
    acc = mult(acc, i);
    ++n;
  }
  return n;
}

size_t FiniteGroup::exponent() const {
  size_t e = 1;
  for (size_t i = 0; i < size(); ++i) e = std::lcm(e, order_of(i));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (size_t a : gens_)
    for (size_t b : gens_)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

const std::vector<std::vector<size_t>>& FiniteGroup::conjugacy_classes() const {
  if (!classes_.empty() || size() == 0) return classes_;
  class_of_.assign(size(), static_cast<size_t>(-1));
  std::vector<std::vector<size_t>> raw;
  for (size_t i = 0; i < size(); ++i) {
    if (class_of_[i] != static_cast<size_t>(-1)) continue;
    // conjugation orbit via BFS over the whole group (sizes are small)
    std::vector<size_t> cls;
    std::vector<char> in(size(), 0);
    cls.push_back(i);
    in[i] = 1;
    for (size_t h = 0; h < cls.size(); ++h) {
      for (size_t g = 0; g < size(); ++g) {
        size_t c = mult(mult(g, cls[h]), inv_[g]);
        if (!in[c]) {
          in[c] = 1;
          cls.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    size_t ci = raw.size();
    for (size_t e : cls) class_of_[e] = ci;
    raw.push_back(std::move(cls));
  }
  // canonical order: element order, class size, lexicographically least perm
  std::vector<size_t> idx(raw.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  auto lex_min = [&](size_t c) -> const Perm& {
    size_t best = raw[c][0];
    for (size_t e : raw[c])
      if (elems_[e] < elems_[best]) best = e;
    return elems_[best];
  };
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    size_t oa = order_of(raw[a][0]), ob = order_of(raw[b][0]);
    if (oa != ob) return oa < ob;
    if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
    return lex_min(a) < lex_min(b);
  });
  classes_.resize(raw.size());
  for (size_t k = 0; k < idx.size(); ++k) classes_[k] = raw[idx[k]];
  for (size_t k = 0; k < classes_.size(); ++k)
    for (size_t e : classes_[k]) class_of_[e] = k;
  return classes_;
}

size_t FiniteGroup::class_of(size_t i) const {
  conjugacy_classes();
  return class_of_[i];
}

size_t FiniteGroup::class_rep(size_t c) const {
  const auto& cls = conjugacy_classes()[c];
  size_t best = cls[0];
  for (size_t e : cls)
    if (elems_[e] < elems_[best]) best = e;
  return best;
}

FiniteGroup group_from_table(const std::vector<std::vector<size_t>>& table) {
  size_t n = table.size();
  if (n == 0) throw config_error("empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw config_error("multiplication table is not square");
    std::vector<char> hit(n, 0);
    for (size_t v : row) {
      if (v >= n || hit[v]) throw config_error("table row is not a bijection");
      hit[v] = 1;
    }
  }
  size_t id = n;
  for (size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (size_t j = 0; j < n; ++j) ok &= table[e][j] == j && table[j][e] == j;
    if (ok) id = e;
  }
  if (id == n) throw config_error("table has no identity element");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw config_error("table is not associative");
  std::vector<Perm> rows(table.begin(), table.end());
  return FiniteGroup::from_elements(std::move(rows));
}

FiniteGroup parse_group_table(const std::string& text) {
  std::vector<size_t> nums;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c >= '0' && c <= '9') {
      size_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
      nums.push_back(v);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      ++i;
    } else {
      throw config_error("unexpected character in group table");
    }
  }
  if (nums.empty()) throw config_error("group table is empty");
  size_t n = nums[0];
  if (n == 0 || nums.size() != 1 + n * n) throw config_error("group table has wrong entry count");
  std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) table[r][c] = nums[1 + r * n + c];
  return group_from_table(table);
}

std::vector<std::vector<size_t>> extend_action(
    const FiniteGroup& gamma,
    const std::vector<std::pair<size_t, std::vector<size_t>>>& generator_images) {
  size_t npts = generator_images.empty() ? 0 : generator_images[0].second.size();
  std::vector<std::vector<size_t>> act(gamma.size());
  std::vector<char> done(gamma.size(), 0);
  std::vector<size_t> queue{gamma.identity()};
  act[gamma.identity()].resize(npts);
  std::iota(act[gamma.identity()].begin(), act[gamma.identity()].end(), size_t{0});
  done[gamma.identity()] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    size_t y = queue[head];
    for (const auto& [g, img] : generator_images) {
      require(img.size() == npts, "generator image degree mismatch");
      size_t x = gamma.mult(g, y);
      if (done[x]) continue;
      act[x].resize(npts);
      for (size_t t = 0; t < npts; ++t) act[x][t] = img[act[y][t]];
      done[x] = 1;
      queue.push_back(x);
    }
  }
  for (char d : done) require(d, "images given for a non-generating set");
  return act;
}

std::vector<size_t> automorphism_from_generator_images(
    const FiniteGroup& g, const std::vector<std::pair<size_t, size_t>>& images) {
  size_t n = g.size();
  std::vector<size_t> img(n, n);
  img[g.identity()] = g.identity();
  std::vector<size_t> queue{g.identity()};
  for (size_t head = 0; head < queue.size(); ++head) {
    size_t y = queue[head];
    for (const auto& [gen, gen_img] : images) {
      size_t x = g.mult(gen, y);
      if (img[x] != n) continue;
      img[x] = g.mult(gen_img, img[y]);
      queue.push_back(x);
    }
  }
  for (size_t v : img) require(v < n, "images given for a non-generating set");
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      require(img[g.mult(x, y)] == g.mult(img[x], img[y]), "image map is not a homomorphism");
  std::vector<char> hit(n, 0);
  for (size_t v : img) {
    require(!hit[v], "image map is not injective");
    hit[v] = 1;
  }
  return img;
}

FiniteGroup subgroup(const FiniteGroup& g, const std::vector<size_t>& generator_indices) {
  std::vector<Perm> gens;
  for (size_t i : generator_indices) gens.push_back(g.perm(i));
  return FiniteGroup::from_generators(g.degree(), gens, g.size() + 1);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  size_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (size_t i : a.generators()) {
    Perm p = identity_perm(da + db);
    for (size_t x = 0; x < da; ++x) p[x] = a.perm(i)[x];
    gens.push_back(p);
  }
  for (size_t j : b.generators()) {
    Perm p = identity_perm(da + db);
    for (size_t x = 0; x < db; ++x) p[da + x] = da + b.perm(j)[x];
    gens.push_back(p);
  }
  return FiniteGroup::from_generators(da + db, gens, a.size() * b.size() + 1);
}

SemidirectProduct semidirect_product(const FiniteGroup& n, const FiniteGroup& gamma,
                                     const std::vector<std::vector<size_t>>& action) {
  require(action.size() == gamma.size(), "action must be given on every element of Gamma");
  // verify: each action[g] is an automorphism of N
  for (size_t g = 0; g < gamma.size(); ++g) {
    const auto& a = action[g];
    require(a.size() == n.size(), "action entry has wrong size");
    std::vector<char> hit(n.size(), 0);
    for (size_t x : a) {
      require(x < n.size() && !hit[x], "action entry is not a bijection");
      hit[x] = 1;
    }
    require(a[n.identity()] == n.identity(), "automorphism must fix the identity");
    for (size_t x = 0; x < n.size(); ++x)
      for (size_t y = 0; y < n.size(); ++y)
        require(a[n.mult(x, y)] == n.mult(a[x], a[y]), "action is not by automorphisms");
  }
  require(action[gamma.identity()] == [&] {
    std::vector<size_t> e(n.size());
    std::iota(e.begin(), e.end(), size_t{0});
    return e;
  }(), "identity of Gamma must act trivially");
  for (size_t g = 0; g < gamma.size(); ++g)
    for (size_t h = 0; h < gamma.size(); ++h) {
      size_t gh = gamma.mult(g, h);
      for (size_t x = 0; x < n.size(); ++x)
        require(action[gh][x] == action[g][action[h][x]], "action not multiplicative");
    }

  // points are pairs (n, gamma) -> index n * |Gamma| + gamma
  size_t ng = n.size(), gg = gamma.size();
  auto pt = [&](size_t ni, size_t gi) { return ni * gg + gi; };
  // left translation by (n0, g0): (n, g) -> (n0 * phi_{g0}(n), g0 g)
  auto left = [&](size_t n0, size_t g0) {
    Perm p(ng * gg);
    for (size_t ni = 0; ni < ng; ++ni)
      for (size_t gi = 0; gi < gg; ++gi)
        p[pt(ni, gi)] = pt(n.mult(n0, action[g0][ni]), gamma.mult(g0, gi));
    return p;
  };
  std::vector<Perm> gens;
  for (size_t i : n.generators()) gens.push_back(left(i, gamma.identity()));
  for (size_t j : gamma.generators()) gens.push_back(left(n.identity(), j));
  SemidirectProduct out;
  out.group = FiniteGroup::from_generators(ng * gg, gens, ng * gg + 1);
  require(out.group.size() == ng * gg, "semidirect product has wrong order");
  out.n_image.resize(ng);
  for (size_t i = 0; i < ng; ++i) out.n_image[i] = out.group.index_of(left(i, gamma.identity()));
  out.gamma_image.resize(gg);
  for (size_t j = 0; j < gg; ++j) out.gamma_image[j] = out.group.index_of(left(n.identity(), j));
  out.factor.resize(out.group.size());
  for (size_t e = 0; e < out.group.size(); ++e) {
    // the image of the point (1_N, 1_Gamma) identifies the pair
    size_t img = out.group.perm(e)[pt(n.identity(), gamma.identity())];
    out.factor[e] = {img / gg, img % gg};
  }
  return out;
}

QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<size_t>& normal_elements) {
  std::vector<char> in(g.size(), 0);
  for (size_t e : normal_elements) in[e] = 1;
  require(in[g.identity()], "normal subgroup must contain the identity");
  for (size_t a : normal_elements)
    for (size_t b : normal_elements)
      require(in[g.mult(a, b)], "subgroup not closed");
  for (size_t a : normal_elements)
    for (size_t x = 0; x < g.size(); ++x)
      require(in[g.mult(g.mult(x, a), g.inverse(x))], "subgroup not normal");

  size_t m = normal_elements.size();
  require(g.size() % m == 0, "Lagrange violation");
  size_t ncosets = g.size() / m;
  std::vector<size_t> coset(g.size(), static_cast<size_t>(-1));
  std::vector<size_t> coset_rep;
  for (size_t e = 0; e < g.size(); ++e) {
    if (coset[e] != static_cast<size_t>(-1)) continue;
    size_t c = coset_rep.size();
    coset_rep.push_back(e);
    for (size_t a : normal_elements) coset[g.mult(e, a)] = c;  // left coset eN
  }
  require(coset_rep.size() == ncosets, "coset count mismatch");
  // left translation action on cosets, generators of g suffice
  std::vector<Perm> gens;
  for (size_t i : g.generators()) {
    Perm p(ncosets);
    for (size_t c = 0; c < ncosets; ++c) p[c] = coset[g.mult(i, coset_rep[c])];
    gens.push_back(p);
  }
  QuotientGroup out;
  out.group = FiniteGroup::from_generators(ncosets, gens, ncosets + 1);
  require(out.group.size() == ncosets, "quotient is not faithful on cosets");
  out.projection.resize(g.size());
  for (size_t e = 0; e < g.size(); ++e) {
    Perm p(ncosets);
    for (size_t c = 0; c < ncosets; ++c) p[c] = coset[g.mult(e, coset_rep[c])];
    out.projection[e] = out.group.index_of(p);
  }
  return out;
}

void GAction::check() const {
  require(group != nullptr, "action without a group");
  require(table.size() == group->size(), "action table must cover the group");
  size_t npts = num_points();
  for (const auto& row : table) require(row.size() == npts, "ragged action table");
  const auto& idrow = table[group->identity()];
  for (size_t x = 0; x < npts; ++x) require(idrow[x] == x, "identity must act trivially");
  // generator times everything pins down all rows by induction on word length
  for (size_t i : group->generators())
    for (size_t j = 0; j < group->size(); ++j) {
      size_t ij = group->mult(i, j);
      for (size_t x = 0; x < npts; ++x)
        require(table[ij][x] == table[i][table[j][x]], "action not multiplicative");
    }
}

std::vector<std::vector<size_t>> GAction::orbits() const {
  size_t npts = num_points();
  std::vector<char> seen(npts, 0);
  std::vector<std::vector<size_t>> out;
  for (size_t x = 0; x < npts; ++x) {
    if (seen[x]) continue;
    std::vector<size_t> orb{x};
    seen[x] = 1;
    for (size_t h = 0; h < orb.size(); ++h)
      for (size_t g = 0; g < group->size(); ++g) {
        size_t y = table[g][orb[h]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<size_t> GAction::stabilizer(size_t x) const {
  std::vector<size_t> out;
  for (size_t g = 0; g < group->size(); ++g)
    if (table[g][x] == x) out.push_back(g);
  return out;
}

}  // namespace atlas
