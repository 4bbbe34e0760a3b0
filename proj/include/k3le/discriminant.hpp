#pragma once

#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "k3le/lattice.hpp"

namespace k3le {

using Fraction = boost::rational<Int>;

// Representative of x modulo `modulus` in [0, modulus).
Fraction reduce_mod(const Fraction& x, Int modulus);

// The finite group L^∨/L with its discriminant quadratic form.
//
// Elements are coefficient tuples (a_1, ..., a_m) with 0 <= a_i < d_i over
// the recorded generators g_i. For even lattices q takes values in Q/2Z;
// for odd lattices only the values modulo 1 are meaningful.
struct DiscriminantGroup {
  std::vector<Int> invariant_factors;
  // g_i = generator_numerators[i] / invariant_factors[i], in L ⊗ Q coordinates
  std::vector<Vector> generator_numerators;
  std::vector<Fraction> q_values;               // q(g_i) in [0, 2)
  std::vector<std::vector<Fraction>> bilinear;  // b(g_i, g_j) in [0, 1)
  bool even = true;

  Int order() const;
  Fraction q(std::span<const Int> coeffs) const;
  Fraction b(std::span<const Int> x, std::span<const Int> y) const;
  std::vector<Vector> elements() const;
};

DiscriminantGroup discriminant_group(const GramLattice& lattice);

bool is_two_elementary(const GramLattice& lattice);

inline constexpr Int kDefaultGroupOrderBound = 64;

// Brute force over group isomorphisms: is (A_1, q_1) ≅ (A_2, ±q_2)?
bool discriminant_forms_match(const GramLattice& a, const GramLattice& b, bool sign_flip,
                              Int group_order_bound = kDefaultGroupOrderBound);

// True iff the discriminant form has a nonzero isotropic element.
bool has_nontrivial_overlattice(const GramLattice& lattice, Int group_order_bound);

}  // namespace k3le
