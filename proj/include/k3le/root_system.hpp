#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "k3le/lattice.hpp"

namespace k3le {

enum class RootFamily { A, D, E };

struct RootComponent {
  RootFamily family = RootFamily::A;
  int rank = 1;

  auto operator<=>(const RootComponent&) const = default;
};

// A formal multiset of ADE components, e.g. "A2+2A1".
class RootSystemLabel {
 public:
  RootSystemLabel() = default;
  explicit RootSystemLabel(std::vector<RootComponent> components);

  // Accepts "A2+2A1", "E8+2A1", "A2⊕A1"; the empty string is the empty system.
  static RootSystemLabel parse(std::string_view text);

  const std::vector<RootComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  int rank() const;
  std::string to_string() const;

  bool operator==(const RootSystemLabel&) const = default;

 private:
  std::vector<RootComponent> components_;  // canonical order
};

Int root_count_formula(const RootSystemLabel& label);
Int root_count_formula(const RootComponent& c);

// Gram matrix of a single ADE component in the simple-root basis
// (positive definite: 2 on the diagonal, -1 on edges).
IntMatrix ade_gram(const RootComponent& c);
GramLattice builtin_gram(const RootSystemLabel& label);

// Named lattices: "U", "A<n>", "D<n>", "E6", "E7", "E8", "E10", "II_1_9",
// "<m>" for a rank one lattice, "2E8" multiplicities, "(<m>)" rescaling
// (e.g. "E8(-1)", "U(2)"), and '+' for orthogonal sums, e.g.
// "U+2E8(-1)+<10>".
GramLattice builtin_gram(std::string_view name);

// All vectors of norm ±2 of a definite lattice, sorted lexicographically.
std::vector<Vector> enumerate_roots(const GramLattice& lattice);

// Number of roots of `lattice` orthogonal to d. The complement of d must
// be definite (for signature (1, n) this means d^2 > 0).
Int orthogonal_root_count(const GramLattice& lattice, std::span<const Int> d);

// The ten-node diagram
//   C1 - C2 - C3 - C4 - C5 - C6 - C7 - C9 - C10
//                                 |
//                                 C8
// with Gram matrix -2 on the diagonal and 1 on edges.
namespace e10 {

inline constexpr int kNodes = 10;
inline constexpr std::array<std::pair<int, int>, 9> kEdges = {
    {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {7, 9}, {9, 10}}};

// Subsets of {1..10}: bit (i-1) set for node C_i.
using NodeMask = std::uint16_t;

NodeMask mask_of(std::span<const int> nodes);
std::vector<int> nodes_of(NodeMask mask);
bool adjacent(int a, int b);
int degree(int node);

GramLattice lattice();
IntMatrix induced_gram(NodeMask mask);

// ADE type of the sub-diagram on J. Throws NotClassifiable for shapes that
// are not finite ADE diagrams (the affine E8 inside E10, or E10 itself).
RootSystemLabel classify_subdiagram(NodeMask mask);
RootSystemLabel classify_subdiagram(std::span<const int> nodes);

}  // namespace e10

}  // namespace k3le
