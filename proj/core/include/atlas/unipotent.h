#pragma once

#include "atlas/fingrp.h"
#include "atlas/rootdata.h"
#include "atlas/torus.h"

#include <string>
#include <vector>

namespace atlas {

// Partitions are weakly decreasing with positive parts.
using Partition = std::vector<Int>;

std::vector<Partition> partitions_of(Int n);
Partition transpose_partition(const Partition& p);
// a >= b in dominance (prefix sums); both must partition the same number.
bool dominates(const Partition& a, const Partition& b);
std::vector<Int> distinct_parts(const Partition& p);
Int multiplicity_of(const Partition& p, Int part);

// One irreducible factor of the derived group of M°, cut out of the ambient
// datum, with its simple roots put into the standard diagram order for the
// series. center_order is the order of the factor subgroup's center, read off
// the cocharacter lattice: det(Cartan) / [Y ∩ span(coroots) : Z-span(coroots)].
struct SimpleFactor {
  char series = 'A';               // 'A','B','C','D','G'
  size_t rank = 0;
  std::vector<size_t> simples;     // ambient root indices, diagram order
  std::vector<size_t> roots;       // every ambient root index of the factor
  Int center_order = 1;

  // number of Jordan coordinates of the classical matrix model
  Int model_size() const;
};

// Decomposition of a subsystem into standard-ordered irreducible factors.
// A full irreducible component of the ambient datum keeps the series declared
// in the ambient label (so a datum built as C2 reports symplectic partitions);
// proper rank-2 double-bond subsystems use the canonical B2 orientation.
std::vector<SimpleFactor> split_factors(const RootDatum& rd, const Subsystem& sub);

// Names of the five G2 classes, index order = enumeration order.
extern const char* const kG2ClassNames[5];

// Label of a unipotent class in one factor: a partition subject to the
// series rule (A_k: of k+1; B_k: of 2k+1, even parts with even multiplicity;
// C_k: of 2k, odd parts with even multiplicity; D_k: of 2k, even parts with
// even multiplicity), or a tabulated G2 class. Very even D-partitions (all
// parts even) occur twice, tagged I and II.
struct FactorClass {
  Partition lambda;       // empty for G2 factors
  int g2 = -1;            // index into kG2ClassNames for series 'G'
  int very_even = 0;      // 0 none, 1 = I, 2 = II
};

struct UnipotentClass {
  std::vector<FactorClass> parts;  // aligned with the factor list
  Int dim_orbit = 0;
  Int d_x = 0;                     // real dimension of the Springer fiber:
                                   // #roots(M°) - dim_orbit
};

// Complete class list of M° together with the permutation action of π₀(M)
// (factor permutations, D very-even swaps) through the chosen splitting.
struct UnipotentClassList {
  std::vector<SimpleFactor> factors;
  std::vector<UnipotentClass> classes;
  // pi0_perm[p][c] = index of the image of class c under π₀(M) element p
  std::vector<std::vector<size_t>> pi0_perm;
  // the same action factor by factor: image factor index and whether the
  // induced diagram map reverses the factor (A chains) or swaps the D fork
  std::vector<std::vector<size_t>> pi0_factor_image;
  std::vector<std::vector<char>> pi0_factor_flip;

  Int num_roots() const;           // #roots of M°
  size_t trivial_class() const;    // index of the dim-0 class
  size_t regular_class() const;    // index of the unique top class
};

UnipotentClassList enumerate_unipotent_classes(const RootDatum& rd, const PseudoLevi& m);

// Stable string form, e.g. "C2:[2,2]" or "A1:[2]xD4:[4,4]:I" or "G2:G2(a1)".
std::string class_label(const UnipotentClassList& list, size_t index);
std::string to_string(const FactorClass& fc, const SimpleFactor& f);
// Inverse of class_label; config_error when absent.
size_t find_class(const UnipotentClassList& list, const std::string& label);

enum class ClosureRelation { less, greater, equal, incomparable };

// Product over factors of per-factor dominance (G2 classes are a chain;
// very even D-classes with the same partition but different tags are
// incomparable). less means c1 lies in the boundary of c2.
ClosureRelation closure_order(const UnipotentClassList& list, size_t c1, size_t c2);

// Weighted Dynkin diagram of a class with the cocharacter h realizing it:
// <alpha_i, h> = label_i on the factor simples, h supported on the span of
// the factor coroots.
struct WeightedDynkin {
  std::vector<std::pair<size_t, Int>> labels;  // (ambient simple root index, 0/1/2)
  QVec cocharacter;                            // h in Y ⊗ Q

  Int label_at(size_t root_index) const;
};

WeightedDynkin weighted_dynkin(const RootDatum& rd, const UnipotentClassList& list,
                               size_t index);

// π₀(Z_{M°}(x)) with the stabilizer of the class label in π₀(M) attached.
// Per factor: type A gives Z/gcd(parts, center_order); B/D give the
// orthogonal-group 2-group (Z/2)^{max(a-1,0)} over the a distinct odd parts,
// with one extra central Z/2 at the simply connected level when every odd
// part has multiplicity one; C gives (Z/2)^b over the b distinct even parts,
// cut by the image of the center when center_order = 1; G2 data is tabulated.
struct ComponentGroupData {
  Int a_x_order = 1;
  FiniteGroup a_x;                 // realized product of cyclic groups (S3 for G2(a1))
  std::vector<size_t> pi0_stab;    // π₀(M) elements fixing the class label
  Int pi0_zmx_order = 1;           // |π₀(Z_M(x))| = a_x_order * |pi0_stab|
};

ComponentGroupData component_group(const RootDatum& rd, const PseudoLevi& m,
                                   const UnipotentClassList& list, size_t index);

// Parts of the factor partition carrying the Z/2 generators of A_x (distinct
// even parts for C, distinct odd parts for B/D), ascending. Empty for A/G2.
std::vector<Int> rho_generator_parts(const SimpleFactor& f, const FactorClass& fc);

// Ambient root indices of a Bala-Carter Levi containing the class as a
// distinguished element: per factor, pairs of equal parts peel off as
// GL-blocks and the remaining distinct parts form the distinguished tail.
// Deterministic block placement; the result is canonical up to W-conjugacy.
std::vector<size_t> bala_carter_support(const RootDatum& rd, const UnipotentClassList& list,
                                        size_t index);

// A torus point carrying a formal q^{1/2}-shift along a cocharacter: the
// point t · h(q^{1/2}), stored exactly as the pair (t, h).
struct TqPoint {
  TorusPoint t;
  QVec h;          // exponent of q^{1/2} along each cocharacter coordinate

  bool is_plain() const;  // no formal part
};

TqPoint t_q_point(const TorusPoint& t, const WeightedDynkin& wd);
std::string to_string(const TqPoint& p);

}  // namespace atlas
