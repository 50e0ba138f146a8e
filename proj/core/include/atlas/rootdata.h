#pragma once

#include "atlas/intmat.h"
#include "atlas/rat.h"

#include <optional>
#include <string>
#include <vector>

namespace atlas {

// Based root datum (X, roots, Y, coroots) of a split reductive complex group,
// with X identified with Z^rank and Y with its dual basis, so the pairing is
// the plain dot product. Roots live in X coordinates, coroots in Y
// coordinates. Positive roots come first, ordered by (height, support, lex);
// root i has its negative at index i + num_positive.
struct RootDatum {
  size_t rank = 0;
  std::vector<IVec> roots;
  std::vector<IVec> coroots;
  std::vector<IVec> simple_coords;   // root i as integer combo of simple roots
  std::vector<size_t> simples;       // indices of the simple system
  std::string label;                 // e.g. "B2-ad", "A1xA1-sc"

  size_t num_roots() const { return roots.size(); }
  size_t num_positive() const { return roots.size() / 2; }
  bool is_positive(size_t i) const { return i < num_positive(); }
  size_t negative_of(size_t i) const {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }
  Int height(size_t i) const;
  // index of a root given by X coordinates, if present
  std::optional<size_t> root_index(const IVec& x) const;

  Int pairing(size_t root_i, size_t coroot_j) const {
    return dot(roots[root_i], coroots[coroot_j]);
  }
  // Cartan matrix over the simple system: (i, j) = <alpha_i, alpha_j^vee>
  IntMat cartan() const;
  IVec two_rho() const;             // sum of positive roots, X coordinates
  size_t highest_root() const;      // unique positive root of maximal height

  // image of root index under s_j for simple position j (0-based)
  IVec reflect(const IVec& x, size_t root_i) const;
};

// type_label: 'x'-separated product of A1..A8, B2..B8, C2..C8, D2..D8, G2.
// isogeny: "sc" (X = weight lattice), "ad" (X = root lattice), or "explicit"
// with lattice rows expressed in the weight-lattice basis; the row span must
// contain every root and is checked to sit inside the weight lattice.
RootDatum build_root_datum(const std::string& type_label, const std::string& isogeny,
                           const std::vector<IVec>& lattice = {});

// Langlands dual datum: roots and coroots swap roles.
RootDatum dual_datum(const RootDatum& rd);

struct WeylElement {
  IntMat mat;                // action on X coordinates
  std::vector<size_t> perm;  // perm[i] = index of w(root_i)
  size_t length = 0;         // #{positive roots sent to negative}
};

// The full Weyl group, elements in a deterministic order (identity first,
// then by BFS over right multiplication by simple reflections, ties by perm).
class WeylGroup {
 public:
  WeylGroup(const RootDatum& rd, std::vector<WeylElement> elts);

  size_t size() const { return elts_.size(); }
  const WeylElement& operator[](size_t i) const { return elts_[i]; }
  const RootDatum& datum() const { return *rd_; }

  size_t identity() const { return id_; }
  size_t mult(size_t i, size_t j) const;      // index of w_i w_j
  size_t inverse(size_t i) const;
  size_t index_of_perm(const std::vector<size_t>& p) const;  // throws if absent
  size_t simple_reflection(size_t j) const { return simple_refl_[j]; }
  // reflection in an arbitrary root
  size_t reflection(size_t root_i) const { return refl_[root_i]; }

  // action of w_i on Y coordinates: transpose of the X-matrix of w_i^{-1}
  IntMat y_matrix(size_t i) const;
  QVec act_y(size_t i, const QVec& y) const;

 private:
  const RootDatum* rd_;
  std::vector<WeylElement> elts_;
  std::vector<size_t> inv_;
  std::vector<size_t> simple_refl_;
  std::vector<size_t> refl_;
  size_t id_ = 0;
  // perm -> index, for O(log) products
  std::vector<size_t> order_;  // element indices sorted by perm
};

// Generation bound: ATLAS_MAX_W environment variable, default 10^6.
size_t weyl_order_bound();
WeylGroup generate_weyl(const RootDatum& rd);

// Coefficients of P(q) = sum_w q^{l(w)}, index = degree.
IVec poincare_polynomial(const WeylGroup& w);

// A closed subsystem of the root system (e.g. roots vanishing on a torus
// point), with its simple system and Cartan-type classification.
struct Subsystem {
  std::vector<size_t> root_indices;    // closed under negation, ambient indices
  std::vector<size_t> simple_indices;  // simple system, ambient indices
  std::string type_label;              // canonical, e.g. "A1xA1", "" if empty
};

// root_set must be closed under negation and under root addition within the
// ambient system; the simple system is computed against the ambient order.
Subsystem subsystem_of(const RootDatum& rd, const std::vector<size_t>& root_set);

}  // namespace atlas
