#include <algorithm>

#include "k3le/root_system.hpp"

namespace k3le::e10 {

NodeMask mask_of(std::span<const int> nodes) {
  NodeMask m = 0;
  for (int v : nodes) {
    if (v < 1 || v > kNodes) throw InvalidArgument("diagram node out of range: " + std::to_string(v));
    m = static_cast<NodeMask>(m | (1u << (v - 1)));
  }
  return m;
}

std::vector<int> nodes_of(NodeMask mask) {
  std::vector<int> out;
  for (int v = 1; v <= kNodes; ++v)
    if (mask & (1u << (v - 1))) out.push_back(v);
  return out;
}

bool adjacent(int a, int b) {
  for (const auto& [x, y] : kEdges)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

int degree(int node) {
  int d = 0;
  for (const auto& [x, y] : kEdges) d += (x == node) + (y == node);
  return d;
}

IntMatrix induced_gram(NodeMask mask) {
  const std::vector<int> nodes = nodes_of(mask);
  IntMatrix g(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      g(i, j) = i == j ? -2 : adjacent(nodes[i], nodes[j]) ? 1 : 0;
  return g;
}

GramLattice lattice() { return GramLattice(induced_gram(static_cast<NodeMask>((1u << kNodes) - 1))); }

namespace {

NodeMask neighbours(int v, NodeMask within) {
  NodeMask m = 0;
  for (const auto& [x, y] : kEdges) {
    if (x == v && (within & (1u << (y - 1)))) m = static_cast<NodeMask>(m | (1u << (y - 1)));
    if (y == v && (within & (1u << (x - 1)))) m = static_cast<NodeMask>(m | (1u << (x - 1)));
  }
  return m;
}

NodeMask component_of(int v, NodeMask within) {
  NodeMask seen = static_cast<NodeMask>(1u << (v - 1));
  NodeMask frontier = seen;
  while (frontier) {
    NodeMask next = 0;
    for (int u : nodes_of(frontier)) next = static_cast<NodeMask>(next | neighbours(u, within));
    frontier = static_cast<NodeMask>(next & ~seen);
    seen = static_cast<NodeMask>(seen | next);
  }
  return seen;
}

int popcount(NodeMask m) { return __builtin_popcount(m); }

RootComponent classify_component(NodeMask comp) {
  const int size = popcount(comp);
  int branch = 0;
  for (int v : nodes_of(comp))
    if (popcount(neighbours(v, comp)) == 3) branch = v;
  if (branch == 0) return {RootFamily::A, size};

  const NodeMask rest = static_cast<NodeMask>(comp & ~(1u << (branch - 1)));
  std::vector<int> arms;
  for (int u : nodes_of(neighbours(branch, comp))) arms.push_back(popcount(component_of(u, rest)));
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {RootFamily::D, size};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {RootFamily::E, size};
  throw NotClassifiable("sub-diagram is not a finite ADE diagram");
}

}  // namespace

RootSystemLabel classify_subdiagram(NodeMask mask) {
  if (mask >> kNodes) throw InvalidArgument("diagram mask out of range");
  std::vector<RootComponent> comps;
  NodeMask left = mask;
  while (left) {
    const int v = __builtin_ctz(left) + 1;
    const NodeMask comp = component_of(v, mask);
    comps.push_back(classify_component(comp));
    left = static_cast<NodeMask>(left & ~comp);
  }
  return RootSystemLabel(std::move(comps));
}

RootSystemLabel classify_subdiagram(std::span<const int> nodes) { return classify_subdiagram(mask_of(nodes)); }

}  // namespace k3le::e10
