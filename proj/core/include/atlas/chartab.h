#pragma once

#include "atlas/cyclo.h"
#include "atlas/fingrp.h"

#include <vector>

namespace atlas {

// Exact character table. Classes come in the group's canonical class order
// (identity first); rows are sorted by (degree, lexicographic value vector).
struct CharacterTable {
  std::vector<std::vector<size_t>> classes;  // element indices per class
  std::vector<size_t> reps;                  // lexicographically least members
  std::vector<std::vector<Cyclo>> chars;     // chars[r][c]
  std::vector<Int> degrees;                  // chars[r][identity class]

  size_t num_classes() const { return classes.size(); }
  size_t num_chars() const { return chars.size(); }
  // value of row r at an arbitrary group element
  const Cyclo& value_at(const FiniteGroup& g, size_t r, size_t element) const;
  size_t trivial_row() const;  // index of the all-ones character
};

// Abelian groups go through the dual-group construction (pure roots of
// unity); nonabelian ones through eigenvalue splitting of the class algebra
// over a prime field with an exact cyclotomic lift. Deterministic output.
CharacterTable character_table(const FiniteGroup& g);

// Exact orthogonality audit: row orthogonality, column orthogonality and the
// degree sum; throws invariant_error with a description on failure.
void verify_character_table(const FiniteGroup& g, const CharacterTable& t);

// Extended quotient of a finite G-set, both kinds. One fiber per orbit;
// labels index conjugacy classes (kind 1) or irreducibles (kind 2) of the
// stabilizer of the orbit representative.
struct QuotientFiber {
  size_t rep;                     // orbit representative (minimal point)
  std::vector<size_t> orbit;      // sorted points
  FiniteGroup stabilizer;
  CharacterTable stab_table;      // table of the stabilizer
  std::vector<size_t> labels;     // class or irrep indices
  size_t canonical;               // position of [1] resp. triv among labels
};
struct ExtendedQuotientFinite {
  std::vector<QuotientFiber> fibers;
  size_t total() const;
};

ExtendedQuotientFinite extended_quotient_1(const GAction& a);
ExtendedQuotientFinite extended_quotient_2(const GAction& a);

// Deterministic c-Irr system over each orbit: a bijection from stabilizer
// conjugacy classes to stabilizer irreducibles sending [1] to the trivial
// character; admissible_count = number of such bijections.
struct CIrrFiber {
  size_t rep;
  std::vector<size_t> class_to_irrep;  // indexed by class, values irrep rows
  Int admissible_count;
};
struct CIrrSystem {
  std::vector<CIrrFiber> fibers;
};
CIrrSystem c_irr_system(const GAction& a);

// Clifford-theory counting report for N x| Gamma.
struct CliffordReport {
  size_t irr_semidirect;        // |Irr(N x| Gamma)|
  size_t extended_quotient_2;   // |(Irr N // Gamma)_2|
  bool cocycle_trivial_everywhere;
  std::vector<size_t> per_orbit_irr_over;   // irreducibles of S over each orbit
  std::vector<size_t> per_orbit_expected;   // |Irr(Gamma_chi)| per orbit
};
CliffordReport clifford_count(const FiniteGroup& n, const FiniteGroup& gamma,
                              const std::vector<std::vector<size_t>>& action);

}  // namespace atlas
