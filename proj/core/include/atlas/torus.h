#pragma once

#include "atlas/fingrp.h"
#include "atlas/rootdata.h"

#include <string>
#include <vector>

namespace atlas {

// Finite-order point of the dual torus in cocharacter coordinates, read
// modulo the cocharacter lattice Z^rank; every coordinate sits in [0, 1).
// A root alpha is trivial on the point iff <alpha, v> is an integer.
struct TorusPoint {
  QVec v;
  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.v == b.v; }
};

TorusPoint make_torus_point(const QVec& raw);
TorusPoint torus_add(const TorusPoint& a, const TorusPoint& b);
TorusPoint torus_neg(const TorusPoint& a);
Int torus_order(const TorusPoint& a);  // order in (Q/Z)^rank
bool root_trivial_on(const RootDatum& rd, size_t root, const TorusPoint& t);
TorusPoint weyl_apply(const WeylGroup& w, size_t wi, const TorusPoint& t);
std::string to_string(const TorusPoint& t);

// Lexicographically least point of the Weyl orbit of t.
TorusPoint canonical_orbit_point(const RootDatum& rd, const WeylGroup& w, const TorusPoint& t);

// All points killed by multiplication by some d <= bound; a finite
// Weyl-invariant subset (the Weyl group acts by integral matrices on Y).
// Sorted lexicographically.
std::vector<TorusPoint> torus_grid(size_t rank, Int bound);

// Finite subgroup of the torus given by generators.
struct FiniteTorusSubgroup {
  std::vector<TorusPoint> generators;
};

// All elements of the generated subgroup, deterministic order, bounded.
std::vector<TorusPoint> enumerate_torus_subgroup(const FiniteTorusSubgroup& a, size_t rank,
                                                 size_t bound = 100'000);

// Centralizer data of a finite subgroup A of the torus: the roots trivial on
// A span the identity component M°, the full isotropy group W_A splits as
// W^{M°} x| pi0 with a unique section fixing the simple system of M°.
struct PseudoLevi {
  Subsystem sub;                   // roots trivial on A, a closed subsystem
  std::vector<size_t> w_a;         // isotropy group, ambient Weyl indices
  std::vector<size_t> w_m0;        // reflection subgroup of the subsystem
  FiniteGroup wa_group;            // W_A as permutations of the roots
  std::vector<size_t> wa_to_weyl;  // wa_group index -> ambient Weyl index
  QuotientGroup pi0;               // component group W_A / W^{M0}
  std::vector<size_t> splitting;   // pi0 element -> Weyl index of its section

  size_t pi0_order() const { return pi0.group.size(); }
  bool connected() const { return pi0_order() == 1; }
};

PseudoLevi pseudo_levi(const RootDatum& rd, const WeylGroup& w, const FiniteTorusSubgroup& a);
PseudoLevi stabilizer(const RootDatum& rd, const WeylGroup& w, const TorusPoint& t);

// Bernstein datum attached to a residual character datum: H is the
// simultaneous centralizer and W^s = W_A its isotropy group.
PseudoLevi bernstein_data(const RootDatum& rd, const WeylGroup& w,
                          const FiniteTorusSubgroup& c_s);

// A connected component of the w-fixed locus of the torus: base point plus
// the subtorus ker(1 - w); components are counted by the torsion of the
// cocharacter lattice modulo (1 - w).
struct FixedComponent {
  size_t w;            // Weyl index
  TorusPoint base;     // (1 - w) * base is integral
  IVec torsion_label;  // coordinates in the invariant factors > 1
  size_t dim;          // dimension of the component
};

std::vector<FixedComponent> fixed_components(const RootDatum& rd, const WeylGroup& wg,
                                             size_t wi);

// Residual characteristic condition, reported factor by factor:
// A_n needs p > n+1; B, C, D need p != 2; G2 needs p outside {2, 3, 5}.
struct CharConditionReport {
  bool ok = true;
  std::vector<std::pair<std::string, bool>> factors;
};
CharConditionReport check_condition_char(const RootDatum& rd, Int p);

// True when the coroots span the full cocharacter lattice.
bool has_simply_connected_derived_group(const RootDatum& rd);

// Connectedness of the centralizer H: computed pi0 together with the
// sufficient criterion (simply connected derived group + good residual
// characteristic); the criterion forces connectedness, which is asserted.
struct ConnectednessHint {
  bool connected = false;
  bool sc_criterion_applies = false;
};
ConnectednessHint connectedness_hint(const RootDatum& rd, const WeylGroup& w,
                                     const FiniteTorusSubgroup& c_s, Int p);

}  // namespace atlas
