#pragma once

#include <span>
#include <string>
#include <vector>

#include "k3le/integer.hpp"

namespace k3le {

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;  // dimension of the radical

  bool operator==(const Signature&) const = default;
};

std::string to_string(const Signature& s);

// Signature by exact rational diagonalization under congruence.
Signature compute_signature(const IntMatrix& gram);

// A lattice presented by a symmetric integer Gram matrix.
//
// Degenerate and odd Gram matrices are accepted and flagged; callers that
// need a non-degenerate or even lattice check is_degenerate()/is_even().
class GramLattice {
 public:
  explicit GramLattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  Signature signature() const { return signature_; }
  Int determinant() const { return determinant_; }

  bool is_degenerate() const { return determinant_ == 0; }
  bool is_even() const;
  bool is_positive_definite() const;
  bool is_negative_definite() const;
  bool is_definite() const { return is_positive_definite() || is_negative_definite(); }
  bool is_unimodular() const { return determinant_ == 1 || determinant_ == -1; }

  Int inner(std::span<const Int> u, std::span<const Int> v) const;
  Int norm(std::span<const Int> v) const { return inner(v, v); }

  // gram * v
  Vector pairing_vector(std::span<const Int> v) const;

  GramLattice negated() const;

  bool operator==(const GramLattice& o) const { return gram_ == o.gram_; }

 private:
  IntMatrix gram_;
  Signature signature_;
  Int determinant_ = 0;
};

// The unique m > 0 with (v, L) = mZ.
Int divisibility(const GramLattice& lattice, std::span<const Int> v);

bool is_primitive(std::span<const Int> v);

// True iff the reflection in r preserves the lattice, i.e. r^2 | 2 div(r).
bool reflective_check(const GramLattice& lattice, std::span<const Int> r);

struct Complement {
  GramLattice lattice;
  // Basis of the complement, in ambient coordinates.
  std::vector<Vector> basis;
};

// Saturated sublattice orthogonal to every vector in vs.
Complement orthogonal_complement(const GramLattice& lattice, std::span<const Vector> vs);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice direct_sum(std::span<const GramLattice> parts);

// L(m): every pairing multiplied by m. Throws if the result would be odd
// while L is even.
GramLattice rescale(const GramLattice& lattice, Int m);

// Plain integer kernel of the pairing with the rows of `rows`, returned as
// a basis reduced with respect to the standard Euclidean form.
std::vector<Vector> integer_kernel(const IntMatrix& rows);

}  // namespace k3le
