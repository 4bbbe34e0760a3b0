#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3le/root_system.hpp"

namespace k3le::nef {

// D_1..D_10 with D_i . C_j = delta_ij, written in the C-basis.
struct DualBasis {
  GramLattice e10;
  IntMatrix dual_gram;               // D_i . D_j, equal to the inverse Gram
  std::vector<Vector> vectors;       // vectors[i] = D_{i+1}
};

// Throws InvalidArgument when the input is not unimodular, and
// DataIntegrityError when the dual lattice fails the sign pattern the
// search relies on (D_1^2 = 0, D_i^2 > 0 otherwise, all D_i.D_j >= 0).
DualBasis dual_basis(const GramLattice& e10);
const DualBasis& standard_dual_basis();

// FNV-1a over the decimal entries, row-major, comma separated.
std::uint64_t dual_gram_checksum(const IntMatrix& dual_gram);
std::string checksum_hex(std::uint64_t checksum);

struct SearchConfig {
  Int max_k = 4899;
  int min_roots = 2;
  int max_roots = 8;
  int thread_count = 1;
  std::size_t witness_cap = 4;

  // Windows other than [2,8] and [2,10] are accepted but flagged.
  bool experimental() const { return min_roots != 2 || (max_roots != 8 && max_roots != 10); }
  void validate() const;
  bool operator==(const SearchConfig&) const = default;
};

struct Subdiagram {
  e10::NodeMask mask = 0;
  RootSystemLabel type;
  Int root_count = 0;
};

// Every J whose root count lies in [min_roots, max_roots], ordered by |J|
// and then lexicographically by node list.
std::vector<Subdiagram> admissible_subdiagrams(int min_roots, int max_roots);

// b[i] bounds d_{i+1}; b[i] = 0 for nodes in J.
std::vector<Int> coefficient_bounds(e10::NodeMask j, Int max_norm, const DualBasis& dual = standard_dual_basis());

struct NefWitness {
  Int k = 0;
  Vector d_coeffs;  // dual basis
  Vector c_coords;  // C-basis
  RootSystemLabel root_type;
  Int root_count = 0;
  bool primitive = false;

  bool operator==(const NefWitness&) const = default;
};

using WitnessMap = std::map<Int, std::vector<NefWitness>>;

std::set<Int> realizable_set(const WitnessMap& witnesses);

struct SearchControl {
  std::string checkpoint_path;          // empty: no checkpoints
  double checkpoint_interval_s = 30.0;
  const std::atomic<bool>* stop = nullptr;
};

struct SearchResult {
  SearchConfig config;
  WitnessMap witnesses;
  std::uint64_t tuples_visited = 0;
  std::size_t partitions_done = 0;
  std::size_t partitions_total = 0;
  bool complete = false;

  std::set<Int> realizable() const { return realizable_set(witnesses); }
};

// Single-threaded reference traversal.
SearchResult search_serial(const SearchConfig& cfg);

// OpenMP traversal over (J, d_1) partitions. Output is independent of
// cfg.thread_count. With a checkpoint path set, `resume` continues from
// the file written by an interrupted run with the same config.
SearchResult search(const SearchConfig& cfg, const SearchControl& control = {}, bool resume = false);

// Recomputes everything from d_coeffs with no use of the sub-diagram
// shortcut for the root count. Returns a description of the first defect.
std::optional<std::string> witness_defect(const NefWitness& w, const DualBasis& dual = standard_dual_basis());
inline bool verify_witness(const NefWitness& w) { return !witness_defect(w); }

// alpha != beta, alpha^2 > k, beta^2 > k and 4 alpha beta < 5k.
bool split_check(Int k, Int alpha, Int beta);

struct E8Search {
  std::optional<Vector> v;   // simple-root coordinates in E8
  Int orthogonal_roots = 0;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

inline constexpr std::uint64_t kDefaultE8Budget = 10'000'000;

// First vector of norm 2n in E8 (in the enumerator's fixed order) orthogonal
// to between lo and hi of the 240 roots.
E8Search find_e8_vector(Int n, int lo = 2, int hi = 8, std::uint64_t budget = kDefaultE8Budget);

struct LargeKWitness {
  Int k = 0;
  Int alpha = 0;
  Int beta = 0;
  Int n = 0;
  std::optional<Vector> v;        // E8 part, simple-root coordinates
  std::optional<Vector> l;        // alpha e + beta f + v in U+E8(-1)
  std::optional<Int> root_count;  // |R(l)| from the rank-9 complement
  E8Search e8;
};

// alpha = ceil(sqrt(k) + 6), beta = alpha + 1, n = alpha beta - k.
LargeKWitness large_k_witness(Int k, bool complete = true, std::uint64_t budget = kDefaultE8Budget);

}  // namespace k3le::nef
