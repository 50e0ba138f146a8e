#pragma once

#include "atlas/chartab.h"
#include "atlas/torus.h"
#include "atlas/unipotent.h"

#include <compare>
#include <string>
#include <vector>

namespace atlas {

// Character label for the component group A_x of one factor class.
//  - A factors: the character a of the cyclic group Z/g.
//  - B/C/D factors: the marked subset of the distinct odd (B/D) resp. even
//    (C) parts; B/D subsets are read modulo complementation and stored by the
//    canonical representative that omits the largest markable part. spin = 1
//    names the character that is nontrivial on the extra central component
//    of the spin cover (only present at that level).
//  - G2 factors: 0 trivial, 1 the two-dimensional character, 2 sign
//    (the last two occur only at the subregular class, where A_x = S3).
struct RhoLabel {
  Int a = 0;
  std::vector<Int> marks;
  int spin = 0;
  int g2 = 0;

  friend auto operator<=>(const RhoLabel&, const RhoLabel&) = default;
};

std::string to_string(const RhoLabel& r, const SimpleFactor& f);

// Irreducible label for the Weyl group of one factor: a partition for the
// symmetric group, an ordered partition pair for hyperoctahedral groups, an
// unordered pair plus a split tag for D, a named entry for G2.
struct WIrrepLabel {
  Partition alpha;
  Partition beta;
  int d_split = 0;  // 1 or 2 when alpha == beta in a D factor
  int g2 = -1;      // index into kG2IrrepNames

  friend auto operator<=>(const WIrrepLabel&, const WIrrepLabel&) = default;
};

extern const char* const kG2IrrepNames[6];

std::string to_string(const WIrrepLabel& w, const SimpleFactor& f);
Int irrep_dimension(const WIrrepLabel& w, const SimpleFactor& f);

// One pair (class, rho) of the Springer correspondence for M°; geometric
// rows carry the matching Weyl-group irreducible.
struct SpringerRow {
  size_t class_index = 0;
  std::vector<RhoLabel> rho;       // one per factor
  bool geometric = false;
  std::vector<WIrrepLabel> irrep;  // one per factor, filled iff geometric
};

struct SpringerTable {
  std::vector<SpringerRow> rows;   // grouped by class, rho ascending
  size_t geometric_count = 0;

  // row lookup by exact (class, rho); invariant_error if absent
  size_t row_of(size_t class_index, const std::vector<RhoLabel>& rho) const;
  // the geometric row carrying the given irrep vector; invariant_error if none
  size_t row_of_irrep(const std::vector<WIrrepLabel>& irrep) const;
};

// Ordinary Springer correspondence of M°: every (class, Irr(A_x)) pair, the
// geometric ones in bijection with Irr(W^{M°}). Anchors: the trivial class
// carries the trivial representation, the regular class the sign.
SpringerTable springer_table(const RootDatum& rd, const PseudoLevi& m,
                             const UnipotentClassList& list);

// Number of irreducibles of the factor's Weyl group (the bijection target).
Int irrep_count(const SimpleFactor& f);

// Action of a pi0(M) element on a full rho vector (factor transport plus
// character inversion on reversed A factors; the class fixes the cyclic
// orders involved).
std::vector<RhoLabel> rho_apply(const UnipotentClassList& list, size_t p,
                                size_t class_index, const std::vector<RhoLabel>& rho);

// Action of a pi0(M) element on a full irrep vector (factor transport plus
// the D split swap on fork-swapping factors).
std::vector<WIrrepLabel> irrep_apply(const UnipotentClassList& list, size_t p,
                                     const std::vector<WIrrepLabel>& irrep);

// One pi0(M)-orbit of Springer rows, with the stabilizer data needed for
// Clifford counting: the extended data over this orbit are the pairs
// (row, sigma) with sigma an irreducible of the stabilizer.
struct ExtendedSpringerRow {
  size_t row = 0;                 // orbit-minimal SpringerTable row
  std::vector<size_t> orbit;      // sorted distinct row indices
  std::vector<size_t> stab;       // pi0 elements fixing the pair
  FiniteGroup stab_group;         // those elements as a subgroup
  size_t num_sigma = 0;           // |Irr(stabilizer)|
  bool geometric = false;
};

struct ExtendedSpringerTable {
  std::vector<ExtendedSpringerRow> rows;
  size_t geometric_extended = 0;  // sum of num_sigma over geometric rows
  size_t irr_wm = 0;              // |Irr(W^M)| = #classes of the isotropy group
  size_t irrep_route = 0;         // same count through the Irr(W^{M°}) action
};

// Extended Springer correspondence of M = M° . pi0(M), by Clifford counting
// over the pi0(M)-orbits (the relevant 2-cocycles are trivial, so each orbit
// contributes |Irr(stabilizer)|). Asserts the cardinality identity
// geometric_extended == irr_wm == irrep_route.
ExtendedSpringerTable extended_springer_table(const RootDatum& rd, const PseudoLevi& m,
                                              const UnipotentClassList& list,
                                              const SpringerTable& st);

// Affine Springer parameter (t, x, rho1) with rho1 = rho x| sigma: rho at the
// orbit-minimal geometric Springer row, sigma an irreducible of the
// stabilizer of the pair in pi0(M), indexed by its character-table row.
struct AffineSpringerParam {
  TorusPoint t;
  size_t class_index = 0;
  std::vector<RhoLabel> rho;
  size_t sigma = 0;
};

std::string to_string(const AffineSpringerParam& p, const UnipotentClassList& list);

// The fiber of (T // W)_2 over the orbit W·t, enumerated as affine Springer
// parameters, together with the matching counts of the other sets of the
// parameter theorem (all asserted equal).
struct AffineSpringerFiber {
  TorusPoint t;                    // canonical orbit representative
  PseudoLevi m;
  UnipotentClassList classes;
  SpringerTable table;
  ExtendedSpringerTable extended;
  std::vector<AffineSpringerParam> params;

  size_t size() const { return params.size(); }
};

AffineSpringerFiber affine_springer_fiber(const RootDatum& rd, const WeylGroup& w,
                                          const TorusPoint& t);

// The unique parameter over W·t with trivial class and trivial rho1.
AffineSpringerParam spherical_parameter(const RootDatum& rd, const WeylGroup& w,
                                        const TorusPoint& t);

}  // namespace atlas
