#include "atlas/chartab.h"
#include "atlas/corpus.h"
#include "atlas/errors.h"

#include "doctest.h"

#include <algorithm>
#include <numeric>

using namespace atlas;

namespace {

std::vector<Int> degree_multiset(const CharacterTable& t) {
  std::vector<Int> d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

GAction single_fixed_point(const FiniteGroup& g) {
  GAction a;
  a.group = &g;
  a.table.assign(g.size(), {0});
  return a;
}

}  // namespace

TEST_CASE("character table of Z2") {
  FiniteGroup g = FiniteGroup::cyclic(2);
  CharacterTable t = character_table(g);
  verify_character_table(g, t);
  CHECK(degree_multiset(t) == std::vector<Int>{1, 1});
  size_t nontriv = 1 - t.trivial_row();
  CHECK(t.chars[nontriv][1] == Cyclo(Rat(-1)));
}

TEST_CASE("character table of Z6 is the full dual") {
  FiniteGroup g = FiniteGroup::cyclic(6);
  CharacterTable t = character_table(g);
  verify_character_table(g, t);
  CHECK(t.num_chars() == 6);
  for (Int d : t.degrees) CHECK(d == 1);
  // the value set at a generator is exactly the sixth roots of unity
  size_t gen_class = g.class_of(g.generators()[0]);
  std::vector<bool> seen(6, false);
  for (size_t r = 0; r < 6; ++r)
    for (Int k = 0; k < 6; ++k)
      if (t.chars[r][gen_class] == zeta(6, k)) seen[k] = true;
  CHECK(std::count(seen.begin(), seen.end(), true) == 6);
}

TEST_CASE("character table of the Klein four group") {
  FiniteGroup g = direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CharacterTable t = character_table(g);
  verify_character_table(g, t);
  CHECK(t.num_chars() == 4);
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c)
      CHECK((t.chars[r][c] == Cyclo(Rat(1)) || t.chars[r][c] == Cyclo(Rat(-1))));
}

TEST_CASE("character table of S3") {
  FiniteGroup g = FiniteGroup::symmetric(3);
  CharacterTable t = character_table(g);
  verify_character_table(g, t);
  CHECK(degree_multiset(t) == std::vector<Int>{1, 1, 2});
  // the degree-2 character vanishes on transpositions and is -1 on 3-cycles
  size_t two = 0;
  while (t.degrees[two] != 2) ++two;
  for (size_t c = 0; c < 3; ++c) {
    size_t ord = g.order_of(t.reps[c]);
    if (ord == 2) CHECK(t.chars[two][c].is_zero());
    if (ord == 3) CHECK(t.chars[two][c] == Cyclo(Rat(-1)));
  }
}

TEST_CASE("character tables of the two nonabelian groups of order 8") {
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  CharacterTable td = character_table(d4);
  verify_character_table(d4, td);
  CHECK(degree_multiset(td) == std::vector<Int>{1, 1, 1, 1, 2});

  FiniteGroup q8 = quaternion_group();
  CharacterTable tq = character_table(q8);
  verify_character_table(q8, tq);
  CHECK(degree_multiset(tq) == std::vector<Int>{1, 1, 1, 1, 2});
}

TEST_CASE("character table of A4 has cube-root values") {
  FiniteGroup g = FiniteGroup::from_generators(4, {Perm{1, 2, 0, 3}, Perm{1, 0, 3, 2}});
  REQUIRE(g.size() == 12);
  CharacterTable t = character_table(g);
  verify_character_table(g, t);
  CHECK(degree_multiset(t) == std::vector<Int>{1, 1, 1, 3});
  bool saw_irrational = false;
  for (size_t r = 0; r < t.num_chars(); ++r)
    for (size_t c = 0; c < t.num_classes(); ++c) saw_irrational |= !t.chars[r][c].is_rational();
  CHECK(saw_irrational);
}

TEST_CASE("character table of S4") {
  FiniteGroup g = FiniteGroup::symmetric(4);
  CharacterTable t = character_table(g);
  verify_character_table(g, t);
  CHECK(degree_multiset(t) == std::vector<Int>{1, 1, 2, 3, 3});
  // all values of S4 are rational integers
  for (size_t r = 0; r < t.num_chars(); ++r)
    for (size_t c = 0; c < t.num_classes(); ++c) {
      CHECK(t.chars[r][c].is_rational());
      CHECK(is_integral(t.chars[r][c].rational_value()));
    }
}

TEST_CASE("character table of A5 has exact golden-ratio values") {
  FiniteGroup g = FiniteGroup::from_generators(5, {Perm{1, 2, 3, 4, 0}, Perm{1, 2, 0, 3, 4}});
  REQUIRE(g.size() == 60);
  CharacterTable t = character_table(g);
  verify_character_table(g, t);
  CHECK(degree_multiset(t) == std::vector<Int>{1, 3, 3, 4, 5});
  // a degree-3 value x at an order-5 class satisfies (2x - 1)^2 = 5
  bool checked = false;
  for (size_t r = 0; r < t.num_chars(); ++r) {
    if (t.degrees[r] != 3) continue;
    for (size_t c = 0; c < t.num_classes(); ++c) {
      if (g.order_of(t.reps[c]) != 5) continue;
      const Cyclo& x = t.chars[r][c];
      CHECK(!x.is_rational());
      Cyclo y = Rat(2) * x - Cyclo(Rat(1));
      CHECK(y * y == Cyclo(Rat(5)));
      checked = true;
    }
  }
  CHECK(checked);
}

TEST_CASE("character table of S5") {
  FiniteGroup g = FiniteGroup::symmetric(5);
  CharacterTable t = character_table(g);
  verify_character_table(g, t);
  CHECK(degree_multiset(t) == std::vector<Int>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("character tables are deterministic") {
  CharacterTable a = character_table(FiniteGroup::symmetric(4));
  CharacterTable b = character_table(FiniteGroup::symmetric(4));
  REQUIRE(a.num_chars() == b.num_chars());
  for (size_t r = 0; r < a.num_chars(); ++r)
    for (size_t c = 0; c < a.num_classes(); ++c) CHECK(a.chars[r][c] == b.chars[r][c]);
}

TEST_CASE("value_at and trivial_row") {
  FiniteGroup g = FiniteGroup::symmetric(3);
  CharacterTable t = character_table(g);
  size_t triv = t.trivial_row();
  for (size_t e = 0; e < g.size(); ++e) CHECK(t.value_at(g, triv, e) == Cyclo(Rat(1)));
  for (size_t r = 0; r < t.num_chars(); ++r)
    CHECK(t.value_at(g, r, g.identity()) == Cyclo(Rat(t.degrees[r])));
}

TEST_CASE("extended quotient under the trivial group is the base set") {
  FiniteGroup triv = FiniteGroup::trivial();
  GAction a;
  a.group = &triv;
  a.table = {{0, 1, 2, 3}};
  ExtendedQuotientFinite e1 = extended_quotient_1(a), e2 = extended_quotient_2(a);
  CHECK(e1.total() == 4);
  CHECK(e2.total() == 4);
  CHECK(e2.fibers.size() == 4);
  for (const auto& f : e2.fibers) CHECK(f.labels.size() == 1);
}

TEST_CASE("Z2 swapping the two nontrivial characters of Z3") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  GAction a;
  a.group = &c2;
  a.table.assign(2, {0, 1, 2});
  a.table[1 - c2.identity()] = {0, 2, 1};
  ExtendedQuotientFinite e2 = extended_quotient_2(a);
  CHECK(e2.total() == 3);  // 2 over the fixed point + 1 over the swapped pair
  REQUIRE(e2.fibers.size() == 2);
  CHECK(e2.fibers[0].labels.size() == 2);
  CHECK(e2.fibers[1].labels.size() == 1);
  ExtendedQuotientFinite e1 = extended_quotient_1(a);
  CHECK(e1.total() == 3);
  // both kinds have fibers of the same size over every orbit
  for (size_t i = 0; i < e1.fibers.size(); ++i)
    CHECK(e1.fibers[i].labels.size() == e2.fibers[i].labels.size());
}

TEST_CASE("a single fixed point of S3 carries Irr(S3)") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GAction a = single_fixed_point(s3);
  ExtendedQuotientFinite e2 = extended_quotient_2(a);
  CHECK(e2.total() == 3);
  ExtendedQuotientFinite e1 = extended_quotient_1(a);
  CHECK(e1.total() == 3);
  CHECK(e2.fibers[0].canonical == e2.fibers[0].stab_table.trivial_row());
  CHECK(e1.fibers[0].canonical == 0);
}

TEST_CASE("c-Irr system choices") {
  // stabilizer S3: the identity class is forced to the trivial character and
  // the remaining two classes admit exactly two assignments
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GAction a = single_fixed_point(s3);
  CIrrSystem sys = c_irr_system(a);
  REQUIRE(sys.fibers.size() == 1);
  const CIrrFiber& f = sys.fibers[0];
  CHECK(f.admissible_count == 2);
  ExtendedQuotientFinite e2 = extended_quotient_2(a);
  size_t triv = e2.fibers[0].stab_table.trivial_row();
  CHECK(f.class_to_irrep[0] == triv);
  // the assignment is a bijection
  std::vector<size_t> sorted = f.class_to_irrep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<size_t> expect(sorted.size());
  std::iota(expect.begin(), expect.end(), size_t{0});
  CHECK(sorted == expect);

  // stabilizer Z2: everything is forced
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  GAction b = single_fixed_point(c2);
  CIrrSystem sys2 = c_irr_system(b);
  CHECK(sys2.fibers[0].admissible_count == 1);
}

TEST_CASE("clifford counting on the named examples") {
  auto corpus = builtin_clifford_corpus();
  auto find = [&](const std::string& name) -> const CliffordCase& {
    for (const auto& c : corpus)
      if (c.name == name) return c;
    throw std::runtime_error("missing corpus case " + name);
  };
  {
    const CliffordCase& c = find("Z3:Z2 inversion");
    CliffordReport r = clifford_count(c.n, c.gamma, c.action);
    CHECK(r.irr_semidirect == 3);
    CHECK(r.extended_quotient_2 == 3);
    CHECK(r.cocycle_trivial_everywhere);
  }
  {
    const CliffordCase& c = find("V4:Z3 rotation");
    CliffordReport r = clifford_count(c.n, c.gamma, c.action);
    CHECK(r.irr_semidirect == 4);
    CHECK(r.extended_quotient_2 == 4);
    CHECK(r.cocycle_trivial_everywhere);
  }
}

TEST_CASE("clifford counting over the whole corpus") {
  for (const auto& c : builtin_clifford_corpus()) {
    CAPTURE(c.name);
    CliffordReport r = clifford_count(c.n, c.gamma, c.action);
    // independent oracle: irreducibles of the semidirect product are counted
    // by its conjugacy classes, computed with no character theory at all
    SemidirectProduct sd = semidirect_product(c.n, c.gamma, c.action);
    CHECK(r.irr_semidirect == sd.group.conjugacy_classes().size());
    CHECK(r.irr_semidirect == r.extended_quotient_2);
    CHECK(r.cocycle_trivial_everywhere);
    CHECK(r.per_orbit_irr_over == r.per_orbit_expected);
  }
}

TEST_CASE("extended quotient fiber equality across the corpus") {
  // both kinds of extended quotient have fibers of equal size orbit by orbit
  for (const auto& c : builtin_clifford_corpus()) {
    CAPTURE(c.name);
    CharacterTable tn = character_table(c.n);
    GAction a;
    a.group = &c.gamma;
    a.table.assign(c.gamma.size(), std::vector<size_t>(tn.num_chars()));
    for (size_t gi = 0; gi < c.gamma.size(); ++gi) {
      const auto& back = c.action[c.gamma.inverse(gi)];
      for (size_t row = 0; row < tn.num_chars(); ++row) {
        std::vector<Cyclo> moved(tn.num_classes());
        for (size_t cc = 0; cc < tn.num_classes(); ++cc)
          moved[cc] = tn.chars[row][c.n.class_of(back[tn.reps[cc]])];
        size_t target = tn.num_chars();
        for (size_t r2 = 0; r2 < tn.num_chars(); ++r2)
          if (tn.chars[r2] == moved) {
            target = r2;
            break;
          }
        REQUIRE(target < tn.num_chars());
        a.table[gi][row] = target;
      }
    }
    ExtendedQuotientFinite e1 = extended_quotient_1(a), e2 = extended_quotient_2(a);
    REQUIRE(e1.fibers.size() == e2.fibers.size());
    for (size_t i = 0; i < e1.fibers.size(); ++i)
      CHECK(e1.fibers[i].labels.size() == e2.fibers[i].labels.size());
    CHECK(e1.total() == e2.total());
    // every generated c-Irr system induces a fiberwise bijection
    CIrrSystem sys = c_irr_system(a);
    REQUIRE(sys.fibers.size() == e2.fibers.size());
    for (size_t i = 0; i < sys.fibers.size(); ++i) {
      std::vector<size_t> sorted = sys.fibers[i].class_to_irrep;
      std::sort(sorted.begin(), sorted.end());
      std::vector<size_t> expect(sorted.size());
      std::iota(expect.begin(), expect.end(), size_t{0});
      CHECK(sorted == expect);
      CHECK(sys.fibers[i].class_to_irrep[0] == e2.fibers[i].stab_table.trivial_row());
    }
  }
}

TEST_CASE("orthogonality audit rejects a corrupted table") {
  FiniteGroup g = FiniteGroup::symmetric(3);
  CharacterTable t = character_table(g);
  t.chars[0][1] = t.chars[0][1] + Cyclo(Rat(1));
  CHECK_THROWS_AS(verify_character_table(g, t), invariant_error);
}
