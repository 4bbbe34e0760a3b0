#pragma once

#include <optional>
#include <string>

#include "k3le/lattice.hpp"

namespace k3le {

enum class IsometryStatus {
  found,
  // an invariant (rank, determinant, signature, parity, discriminant
  // invariant factors) differs: provably not isometric
  not_isometric,
  // no isometry with coefficients inside the box; not a proof
  not_found_within_bound,
};

std::string to_string(IsometryStatus s);

struct IsometryResult {
  IsometryStatus status = IsometryStatus::not_found_within_bound;
  // B with Bᵀ · gram(from) · B = gram(to); columns are vectors of `from`
  std::optional<IntMatrix> transform;
  std::string reason;
};

inline constexpr Int kDefaultIsometryBound = 12;

// Backtracking search for an isometry `to` -> `from`: picks images of each
// basis vector of `to` among vectors of `from` with entries in
// [-coeff_bound, coeff_bound] and matching pairwise inner products.
IsometryResult isometry_search(const GramLattice& from, const GramLattice& to,
                               Int coeff_bound = kDefaultIsometryBound);

// Post-hoc certificate check: Bᵀ G1 B == G2 and det B = ±1.
bool is_isometry(const GramLattice& from, const GramLattice& to, const IntMatrix& b);

}  // namespace k3le
