#include "atlas/corpus.h"
#include "atlas/errors.h"
#include "atlas/fingrp.h"

#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

using namespace atlas;

TEST_CASE("permutation composition and inversion") {
  Perm f{1, 2, 0}, g{0, 2, 1};
  CHECK(compose(f, g) == Perm{1, 0, 2});
  CHECK(compose(inverse_perm(f), f) == identity_perm(3));
  CHECK(compose(f, inverse_perm(f)) == identity_perm(3));
}

TEST_CASE("cyclic groups") {
  FiniteGroup c6 = FiniteGroup::cyclic(6);
  CHECK(c6.size() == 6);
  CHECK(c6.is_abelian());
  CHECK(c6.exponent() == 6);
  size_t g = c6.generators()[0];
  CHECK(c6.order_of(g) == 6);
  CHECK(c6.power(g, 6) == c6.identity());
  CHECK(c6.power(g, -1) == c6.inverse(g));
  // abelian: every class is a singleton
  CHECK(c6.conjugacy_classes().size() == 6);
}

TEST_CASE("symmetric group on 4 letters") {
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  CHECK(s4.size() == 24);
  CHECK(!s4.is_abelian());
  CHECK(s4.exponent() == 12);
  const auto& cls = s4.conjugacy_classes();
  REQUIRE(cls.size() == 5);
  // canonical order: (element order, class size); sizes from cycle types
  std::vector<std::pair<size_t, size_t>> shape;
  for (const auto& c : cls) shape.emplace_back(s4.order_of(c[0]), c.size());
  std::vector<std::pair<size_t, size_t>> expect{{1, 1}, {2, 3}, {2, 6}, {3, 8}, {4, 6}};
  CHECK(shape == expect);
  size_t total = 0;
  for (const auto& c : cls) {
    CHECK(s4.size() % c.size() == 0);  // class sizes divide the order
    total += c.size();
  }
  CHECK(total == 24);
}

TEST_CASE("dihedral group of order 8") {
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  CHECK(d4.size() == 8);
  CHECK(!d4.is_abelian());
  CHECK(d4.conjugacy_classes().size() == 5);
}

TEST_CASE("trivial group has one class") {
  FiniteGroup t = FiniteGroup::trivial();
  CHECK(t.size() == 1);
  CHECK(t.conjugacy_classes().size() == 1);
}

TEST_CASE("Klein four group has four classes") {
  FiniteGroup v4 = direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(v4.size() == 4);
  CHECK(v4.is_abelian());
  CHECK(v4.exponent() == 2);
  CHECK(v4.conjugacy_classes().size() == 4);
}

TEST_CASE("group order bound raises config_error") {
  Perm rot(40);
  for (size_t i = 0; i < 40; ++i) rot[i] = (i + 1) % 40;
  CHECK_THROWS_AS(FiniteGroup::from_generators(40, {rot}, 10), config_error);
}

TEST_CASE("from_elements rejects non-closed sets") {
  Perm f{1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup::from_elements({identity_perm(3), f}), invariant_error);
}

TEST_CASE("semidirect product Z3 by Z2 inversion is S3") {
  FiniteGroup n = FiniteGroup::cyclic(3), gamma = FiniteGroup::cyclic(2);
  std::vector<size_t> inv(n.size());
  for (size_t x = 0; x < n.size(); ++x) inv[x] = n.inverse(x);
  auto action = extend_action(gamma, {{gamma.generators()[0], inv}});
  SemidirectProduct sd = semidirect_product(n, gamma, action);
  CHECK(sd.group.size() == 6);
  CHECK(!sd.group.is_abelian());
  const auto& cls = sd.group.conjugacy_classes();
  REQUIRE(cls.size() == 3);
  std::vector<size_t> sizes;
  for (const auto& c : cls) sizes.push_back(c.size());
  CHECK(sizes == std::vector<size_t>{1, 3, 2});  // identity, involutions, 3-cycles

  // the copy of N is normal
  std::vector<char> in_n(sd.group.size(), 0);
  for (size_t e : sd.n_image) in_n[e] = 1;
  for (size_t e : sd.n_image)
    for (size_t x = 0; x < sd.group.size(); ++x)
      CHECK(in_n[sd.group.mult(sd.group.mult(x, e), sd.group.inverse(x))]);
  // factorization round-trip
  for (size_t i = 0; i < n.size(); ++i) {
    CHECK(sd.factor[sd.n_image[i]].first == i);
    CHECK(sd.factor[sd.n_image[i]].second == gamma.identity());
  }
  for (size_t j = 0; j < gamma.size(); ++j) {
    CHECK(sd.factor[sd.gamma_image[j]].first == n.identity());
    CHECK(sd.factor[sd.gamma_image[j]].second == j);
  }
}

TEST_CASE("trivial action gives the direct product") {
  FiniteGroup n = FiniteGroup::symmetric(3), gamma = FiniteGroup::cyclic(2);
  std::vector<size_t> id(n.size());
  std::iota(id.begin(), id.end(), size_t{0});
  auto action = extend_action(gamma, {{gamma.generators()[0], id}});
  SemidirectProduct sd = semidirect_product(n, gamma, action);
  FiniteGroup dp = direct_product(n, gamma);
  CHECK(sd.group.size() == dp.size());
  CHECK(sd.group.conjugacy_classes().size() == dp.conjugacy_classes().size());
}

TEST_CASE("Klein four by Z3 is the alternating group A4") {
  FiniteGroup n = direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  FiniteGroup gamma = FiniteGroup::cyclic(3);
  std::vector<size_t> invol;
  for (size_t e = 0; e < n.size(); ++e)
    if (n.order_of(e) == 2) invol.push_back(e);
  REQUIRE(invol.size() == 3);
  std::vector<size_t> img(n.size());
  std::iota(img.begin(), img.end(), size_t{0});
  img[invol[0]] = invol[1];
  img[invol[1]] = invol[2];
  img[invol[2]] = invol[0];
  auto action = extend_action(gamma, {{gamma.generators()[0], img}});
  SemidirectProduct sd = semidirect_product(n, gamma, action);
  CHECK(sd.group.size() == 12);
  const auto& cls = sd.group.conjugacy_classes();
  REQUIRE(cls.size() == 4);
  std::vector<size_t> sizes;
  for (const auto& c : cls) sizes.push_back(c.size());
  CHECK(sizes == std::vector<size_t>{1, 3, 4, 4});
}

TEST_CASE("semidirect product rejects non-automorphism actions") {
  FiniteGroup n = FiniteGroup::cyclic(4), gamma = FiniteGroup::cyclic(2);
  // x -> x^2 is a homomorphism but not a bijection
  std::vector<std::vector<size_t>> action(2);
  size_t id = gamma.identity(), other = 1 - id;
  action[id].resize(4);
  std::iota(action[id].begin(), action[id].end(), size_t{0});
  action[other].resize(4);
  for (size_t x = 0; x < 4; ++x) action[other][x] = n.power(x, 2);
  CHECK_THROWS_AS(semidirect_product(n, gamma, action), invariant_error);
}

TEST_CASE("quotient group collapses a normal subgroup") {
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  // Klein four inside S4: identity and the double transpositions
  std::vector<size_t> v4{s4.identity()};
  for (size_t e = 0; e < s4.size(); ++e)
    if (s4.order_of(e) == 2) {
      const Perm& p = s4.perm(e);
      size_t moved = 0;
      for (size_t x = 0; x < 4; ++x) moved += p[x] != x;
      if (moved == 4) v4.push_back(e);
    }
  REQUIRE(v4.size() == 4);
  QuotientGroup q = quotient_group(s4, v4);
  CHECK(q.group.size() == 6);
  CHECK(!q.group.is_abelian());
  // projection is a homomorphism
  for (size_t a = 0; a < s4.size(); a += 5)
    for (size_t b = 0; b < s4.size(); b += 7)
      CHECK(q.projection[s4.mult(a, b)] == q.group.mult(q.projection[a], q.projection[b]));

  FiniteGroup d4 = FiniteGroup::dihedral(4);
  std::vector<size_t> center;
  for (size_t e = 0; e < d4.size(); ++e) {
    bool central = true;
    for (size_t x = 0; x < d4.size(); ++x) central &= d4.mult(e, x) == d4.mult(x, e);
    if (central) center.push_back(e);
  }
  REQUIRE(center.size() == 2);
  QuotientGroup q2 = quotient_group(d4, center);
  CHECK(q2.group.size() == 4);
  CHECK(q2.group.is_abelian());
  CHECK(q2.group.exponent() == 2);  // D4 over its center is Klein four
}

TEST_CASE("quotient by a non-normal subgroup throws") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  // a two-element subgroup generated by a transposition is not normal
  size_t t = 0;
  for (size_t e = 0; e < s3.size(); ++e)
    if (s3.order_of(e) == 2) {
      t = e;
      break;
    }
  CHECK_THROWS_AS(quotient_group(s3, std::vector<size_t>{s3.identity(), t}), invariant_error);
}

TEST_CASE("subgroup generated by even permutations") {
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  size_t c3 = s4.index_of(Perm{1, 2, 0, 3});
  size_t dd = s4.index_of(Perm{1, 0, 3, 2});
  FiniteGroup a4 = subgroup(s4, {c3, dd});
  CHECK(a4.size() == 12);
  CHECK(a4.conjugacy_classes().size() == 4);
}

TEST_CASE("multiplication table loader") {
  // Z4 written as a table
  std::vector<std::vector<size_t>> z4{
      {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  FiniteGroup g = group_from_table(z4);
  CHECK(g.size() == 4);
  CHECK(g.is_abelian());
  CHECK(g.exponent() == 4);

  // swapping two entries destroys associativity or bijectivity
  std::vector<std::vector<size_t>> bad = z4;
  bad[1][1] = 1;
  CHECK_THROWS_AS(group_from_table(bad), config_error);
  // a Latin square with identity that is not associative: (1*1)*2 != 1*(1*2)
  std::vector<std::vector<size_t>> noassoc{{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 3, 4, 0, 1},
                                           {3, 4, 1, 2, 0},
                                           {4, 2, 0, 1, 3}};
  CHECK_THROWS_AS(group_from_table(noassoc), config_error);
  CHECK_THROWS_AS(group_from_table({}), config_error);
}

TEST_CASE("group table text format") {
  FiniteGroup g = parse_group_table(
      "# Klein four group\n"
      "4\n"
      "0 1 2 3\n"
      "1 0 3 2\n"
      "2 3 0 1\n"
      "3 2 1 0\n");
  CHECK(g.size() == 4);
  CHECK(g.exponent() == 2);
  CHECK_THROWS_AS(parse_group_table("3\n0 1 2"), config_error);
  CHECK_THROWS_AS(parse_group_table("x"), config_error);
  CHECK_THROWS_AS(parse_group_table("# only a comment\n"), config_error);
}

TEST_CASE("shipped quaternion table matches the built-in group") {
  std::ifstream in(ATLAS_TEST_DATA_DIR "/q8.grp");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  FiniteGroup loaded = parse_group_table(buf.str());
  FiniteGroup built = quaternion_group();
  CHECK(loaded.size() == built.size());
  CHECK(loaded.exponent() == built.exponent());
  CHECK(loaded.conjugacy_classes().size() == built.conjugacy_classes().size());
  size_t inv_loaded = 0, inv_built = 0;
  for (size_t e = 0; e < 8; ++e) {
    inv_loaded += loaded.order_of(e) == 2;
    inv_built += built.order_of(e) == 2;
  }
  CHECK(inv_loaded == 1);
  CHECK(inv_built == 1);
}

TEST_CASE("automorphism extension from generator images") {
  FiniteGroup c5 = FiniteGroup::cyclic(5);
  size_t g = c5.generators()[0];
  auto img = automorphism_from_generator_images(c5, {{g, c5.inverse(g)}});
  for (size_t x = 0; x < 5; ++x) CHECK(img[x] == c5.inverse(x));
  // sending a generator of Z4 to an element of order 2 is no automorphism
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  size_t h = c4.generators()[0];
  CHECK_THROWS_AS(automorphism_from_generator_images(c4, {{h, c4.power(h, 2)}}),
                  invariant_error);
}

TEST_CASE("natural action of S3 on three points") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GAction a;
  a.group = &s3;
  a.table.resize(s3.size());
  for (size_t e = 0; e < s3.size(); ++e) a.table[e] = s3.perm(e);
  a.check();
  auto orbs = a.orbits();
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0] == std::vector<size_t>{0, 1, 2});
  auto stab = a.stabilizer(0);
  CHECK(stab.size() == 2);
  CHECK(orbs[0].size() * stab.size() == s3.size());  // orbit-stabilizer
}

TEST_CASE("action table validation catches bad rows") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  GAction a;
  a.group = &c2;
  a.table = {{1, 0}, {0, 1}};
  if (c2.identity() == 0) std::swap(a.table[0], a.table[1]);
  a.table[c2.identity()] = {1, 0};  // identity no longer acts trivially
  CHECK_THROWS_AS(a.check(), invariant_error);
}

TEST_CASE("builtin corpus constructs and respects the order bound") {
  auto corpus = builtin_clifford_corpus();
  CHECK(corpus.size() >= 15);
  for (const auto& c : corpus) {
    CHECK(c.n.size() * c.gamma.size() <= 200);
    CHECK(c.action.size() == c.gamma.size());
  }
  FiniteGroup q8 = quaternion_group();
  CHECK(q8.size() == 8);
  CHECK(q8.exponent() == 4);
  CHECK(!q8.is_abelian());
  // a single involution distinguishes Q8 from D4
  size_t involutions = 0;
  for (size_t e = 0; e < q8.size(); ++e) involutions += q8.order_of(e) == 2;
  CHECK(involutions == 1);
  CHECK(q8.conjugacy_classes().size() == 5);
}
