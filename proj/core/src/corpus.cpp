#include "atlas/corpus.h"

#include "atlas/errors.h"

#include <numeric>

namespace atlas {

namespace {

// x -> x^k on an abelian group
std::vector<size_t> power_map(const FiniteGroup& g, Int k) {
  std::vector<size_t> img(g.size());
  for (size_t x = 0; x < g.size(); ++x) img[x] = g.power(x, k);
  return img;
}

std::vector<size_t> identity_map(size_t n) {
  std::vector<size_t> img(n);
  std::iota(img.begin(), img.end(), size_t{0});
  return img;
}

// conjugation of every element of n by a fixed permutation of its domain
std::vector<size_t> conj_map(const FiniteGroup& n, const Perm& t) {
  Perm tinv = inverse_perm(t);
  std::vector<size_t> img(n.size());
  for (size_t e = 0; e < n.size(); ++e) img[e] = n.index_of(compose(compose(t, n.perm(e)), tinv));
  return img;
}

CliffordCase metacyclic(std::string name, size_t nn, size_t gg, Int k) {
  CliffordCase c;
  c.name = std::move(name);
  c.n = FiniteGroup::cyclic(nn);
  c.gamma = FiniteGroup::cyclic(gg);
  c.action = extend_action(c.gamma, {{c.gamma.generators()[0], power_map(c.n, k)}});
  return c;
}

}  // namespace

FiniteGroup quaternion_group() {
  // points 0..7 are 1, -1, i, -i, j, -j, k, -k; generators left-multiply
  Perm li{2, 3, 1, 0, 6, 7, 5, 4};
  Perm lj{4, 5, 7, 6, 1, 0, 2, 3};
  FiniteGroup q = FiniteGroup::from_generators(8, {li, lj});
  require(q.size() == 8, "quaternion group must have order 8");
  return q;
}

std::vector<CliffordCase> builtin_clifford_corpus() {
  std::vector<CliffordCase> out;

  out.push_back(metacyclic("Z3:Z2 inversion", 3, 2, -1));   // S3
  out.push_back(metacyclic("Z4:Z2 inversion", 4, 2, -1));   // dihedral 8
  out.push_back(metacyclic("Z5:Z2 inversion", 5, 2, -1));   // dihedral 10
  out.push_back(metacyclic("Z3:Z4 inversion", 3, 4, -1));   // dicyclic 12
  out.push_back(metacyclic("Z8:Z2 inversion", 8, 2, -1));   // dihedral 16
  out.push_back(metacyclic("Z5:Z4 by 2", 5, 4, 2));         // Frobenius 20
  out.push_back(metacyclic("Z7:Z3 by 2", 7, 3, 2));         // Frobenius 21
  out.push_back(metacyclic("Z9:Z3 by 4", 9, 3, 4));         // extraspecial-like 27
  out.push_back(metacyclic("Z16:Z2 inversion", 16, 2, -1)); // dihedral 32
  out.push_back(metacyclic("Z13:Z4 by 5", 13, 4, 5));       // Frobenius 52
  out.push_back(metacyclic("Z11:Z5 by 3", 11, 5, 3));       // Frobenius 55

  {
    // Klein four with Z/3 cycling the involutions: A4
    CliffordCase c;
    c.name = "V4:Z3 rotation";
    c.n = direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    c.gamma = FiniteGroup::cyclic(3);
    std::vector<size_t> inv;
    for (size_t e = 0; e < c.n.size(); ++e)
      if (c.n.order_of(e) == 2) inv.push_back(e);
    require(inv.size() == 3, "Klein four group must have three involutions");
    std::vector<size_t> img = identity_map(c.n.size());
    img[inv[0]] = inv[1];
    img[inv[1]] = inv[2];
    img[inv[2]] = inv[0];
    c.action = extend_action(c.gamma, {{c.gamma.generators()[0], img}});
    out.push_back(std::move(c));
  }
  {
    // Klein four with the full S3 on its involutions: S4
    CliffordCase c;
    c.name = "V4:S3 permutation";
    c.n = direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    c.gamma = FiniteGroup::symmetric(3);
    std::vector<size_t> inv;
    for (size_t e = 0; e < c.n.size(); ++e)
      if (c.n.order_of(e) == 2) inv.push_back(e);
    std::vector<std::pair<size_t, std::vector<size_t>>> gen_imgs;
    for (size_t g : c.gamma.generators()) {
      const Perm& p = c.gamma.perm(g);
      std::vector<size_t> img = identity_map(c.n.size());
      for (size_t t = 0; t < 3; ++t) img[inv[t]] = inv[p[t]];
      gen_imgs.emplace_back(g, std::move(img));
    }
    c.action = extend_action(c.gamma, gen_imgs);
    out.push_back(std::move(c));
  }
  {
    // two cyclic squares under inversion
    CliffordCase c;
    c.name = "Z3xZ3:Z2 inversion";
    c.n = direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
    c.gamma = FiniteGroup::cyclic(2);
    c.action = extend_action(c.gamma, {{c.gamma.generators()[0], power_map(c.n, -1)}});
    out.push_back(std::move(c));
    CliffordCase d;
    d.name = "Z5xZ5:Z2 inversion";
    d.n = direct_product(FiniteGroup::cyclic(5), FiniteGroup::cyclic(5));
    d.gamma = FiniteGroup::cyclic(2);
    d.action = extend_action(d.gamma, {{d.gamma.generators()[0], power_map(d.n, -1)}});
    out.push_back(std::move(d));
  }
  {
    // quaternions with the rotation i -> j -> k -> i: SL(2,3)
    CliffordCase c;
    c.name = "Q8:Z3 rotation";
    c.n = quaternion_group();
    c.gamma = FiniteGroup::cyclic(3);
    // point map on 1,-1,i,-i,j,-j,k,-k; elements are left translations, so
    // element e sits over point perm(e)[0]
    Perm omega{0, 1, 4, 5, 6, 7, 2, 3};
    std::vector<size_t> pt2el(c.n.degree());
    for (size_t e = 0; e < c.n.size(); ++e) pt2el[c.n.perm(e)[0]] = e;
    std::vector<size_t> img(c.n.size());
    for (size_t e = 0; e < c.n.size(); ++e) img[e] = pt2el[omega[c.n.perm(e)[0]]];
    c.action = extend_action(c.gamma, {{c.gamma.generators()[0], img}});
    out.push_back(std::move(c));
  }
  {
    // nonabelian kernel, trivial twist: S3 x Z2
    CliffordCase c;
    c.name = "S3xZ2 trivial";
    c.n = FiniteGroup::symmetric(3);
    c.gamma = FiniteGroup::cyclic(2);
    c.action = extend_action(c.gamma, {{c.gamma.generators()[0], identity_map(c.n.size())}});
    out.push_back(std::move(c));
  }
  {
    // alternating group twisted by a transposition: S4
    CliffordCase c;
    c.name = "A4:Z2 transposition";
    Perm threecycle{1, 2, 0, 3}, double_swap{1, 0, 3, 2};
    c.n = FiniteGroup::from_generators(4, {threecycle, double_swap});
    require(c.n.size() == 12, "alternating group on 4 letters has order 12");
    c.gamma = FiniteGroup::cyclic(2);
    Perm t{1, 0, 2, 3};
    c.action = extend_action(c.gamma, {{c.gamma.generators()[0], conj_map(c.n, t)}});
    out.push_back(std::move(c));
  }
  {
    // dihedral 8 with its outer involution a -> a^{-1}, s -> as
    CliffordCase c;
    c.name = "D4:Z2 outer";
    c.n = FiniteGroup::dihedral(4);
    c.gamma = FiniteGroup::cyclic(2);
    size_t a = c.n.generators()[0], s = c.n.generators()[1];
    std::vector<size_t> sigma = automorphism_from_generator_images(
        c.n, {{a, c.n.inverse(a)}, {s, c.n.mult(a, s)}});
    c.action = extend_action(c.gamma, {{c.gamma.generators()[0], sigma}});
    out.push_back(std::move(c));
  }
  {
    // block swap on a square of symmetric groups: S3 wr Z2, order 72
    CliffordCase c;
    c.name = "S3xS3:Z2 swap";
    c.n = direct_product(FiniteGroup::symmetric(3), FiniteGroup::symmetric(3));
    c.gamma = FiniteGroup::cyclic(2);
    Perm swap(6);
    for (size_t x = 0; x < 6; ++x) swap[x] = (x + 3) % 6;
    c.action = extend_action(c.gamma, {{c.gamma.generators()[0], conj_map(c.n, swap)}});
    out.push_back(std::move(c));
  }

  for (const auto& c : out)
    require(c.n.size() * c.gamma.size() <= 200, "corpus case exceeds the order bound");
  return out;
}

}  // namespace atlas
