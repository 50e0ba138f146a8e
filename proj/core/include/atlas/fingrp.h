#pragma once

#include "atlas/rat.h"

#include <string>
#include <vector>

namespace atlas {

using Perm = std::vector<size_t>;

Perm compose(const Perm& f, const Perm& g);  // (f*g)(x) = f(g(x))
Perm inverse_perm(const Perm& f);
Perm identity_perm(size_t degree);

// Finite group stored as permutations of 0..degree-1. Elements keep their
// construction (BFS) order; lookups go through a sorted index. Default order
// bound 10^4 keeps everything desk-scale.
class FiniteGroup {
 public:
  static FiniteGroup from_generators(size_t degree, std::vector<Perm> gens,
                                     size_t bound = 10'000);
  static FiniteGroup from_elements(std::vector<Perm> elems);  // verifies closure
  static FiniteGroup trivial();
  static FiniteGroup cyclic(size_t n);
  static FiniteGroup symmetric(size_t n);
  static FiniteGroup dihedral(size_t n);  // order 2n, acting on n points

  size_t size() const { return elems_.size(); }
  size_t degree() const { return degree_; }
  size_t identity() const { return id_; }
  const Perm& perm(size_t i) const { return elems_[i]; }
  const std::vector<size_t>& generators() const { return gens_; }

  size_t mult(size_t i, size_t j) const;
  size_t inverse(size_t i) const;
  size_t index_of(const Perm& p) const;  // throws if absent
  bool contains(const Perm& p) const;
  size_t power(size_t i, Int e) const;
  size_t order_of(size_t i) const;
  size_t exponent() const;
  bool is_abelian() const;

  // canonical order: (element order, class size, lexicographically least perm)
  const std::vector<std::vector<size_t>>& conjugacy_classes() const;
  size_t class_of(size_t i) const;
  size_t class_rep(size_t c) const;  // lexicographically least element

 private:
  size_t degree_ = 0;
  std::vector<Perm> elems_;
  std::vector<size_t> order_;  // indices sorted by perm
  std::vector<size_t> inv_;
  std::vector<size_t> gens_;
  size_t id_ = 0;
  mutable std::vector<std::vector<size_t>> classes_;
  mutable std::vector<size_t> class_of_;
  void finish_init();
};

// Group from a complete multiplication table (table[i][j] = index of i*j),
// realized by left translations. The table is fully validated (square,
// bijective rows, identity, associativity); config_error on bad input.
FiniteGroup group_from_table(const std::vector<std::vector<size_t>>& table);

// Text form of the above: '#' starts a comment, the first integer is the
// order n, followed by n*n row-major entries. See docs/group-table-format.md.
FiniteGroup parse_group_table(const std::string& text);

// Extends automorphism images of the generators of gamma to a full action
// table (one permutation of 0..npoints-1 per group element).
std::vector<std::vector<size_t>> extend_action(
    const FiniteGroup& gamma,
    const std::vector<std::pair<size_t, std::vector<size_t>>>& generator_images);

// The self-map sending each listed generator to its image, extended
// multiplicatively over g; verified to be an automorphism.
std::vector<size_t> automorphism_from_generator_images(
    const FiniteGroup& g, const std::vector<std::pair<size_t, size_t>>& images);

// Subgroup generated inside g; elements keep g's permutation degree.
FiniteGroup subgroup(const FiniteGroup& g, const std::vector<size_t>& generator_indices);

// Direct product acting on the disjoint union of the two domains.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

struct SemidirectProduct {
  FiniteGroup group;              // acts on pairs (n, gamma) by left translation
  std::vector<size_t> n_image;    // element index of (n, 1) for each n
  std::vector<size_t> gamma_image;  // element index of (1, gamma)
  // factorization: element -> (n index, gamma index)
  std::vector<std::pair<size_t, size_t>> factor;
};

// action[g] maps N element indices to N element indices; must be a
// homomorphism Gamma -> Aut(N), verified.
SemidirectProduct semidirect_product(const FiniteGroup& n, const FiniteGroup& gamma,
                                     const std::vector<std::vector<size_t>>& action);

struct QuotientGroup {
  FiniteGroup group;               // acts on cosets
  std::vector<size_t> projection;  // element of G -> element index in quotient
};

// N must be normal (verified); quotient acts faithfully on left cosets.
QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<size_t>& normal_elements);

// A finite G-set: table[g][x] = g.x
struct GAction {
  const FiniteGroup* group = nullptr;
  std::vector<std::vector<size_t>> table;

  size_t num_points() const { return table.empty() ? 0 : table[0].size(); }
  std::vector<std::vector<size_t>> orbits() const;      // sorted, rep = min
  std::vector<size_t> stabilizer(size_t x) const;       // element indices
  void check() const;  // identity acts trivially, action is multiplicative
};

}  // namespace atlas
