#include <algorithm>
#include <cstdio>
#include <numeric>

#include "k3le/nef_search.hpp"

namespace k3le::nef {

DualBasis dual_basis(const GramLattice& e10) {
  if (e10.rank() != static_cast<std::size_t>(e10::kNodes)) throw DimensionMismatch("dual basis needs a rank 10 lattice");
  if (!e10.is_unimodular()) throw InvalidArgument("dual basis needs a unimodular lattice");
  const auto inv = rational_inverse(e10.gram());
  const std::size_t n = e10.rank();
  IntMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = narrow(boost::multiprecision::numerator(inv[i][j]));

  if (h(0, 0) != 0) throw DataIntegrityError("D_1^2 is not zero");
  for (std::size_t i = 1; i < n; ++i)
    if (h(i, i) <= 0) throw DataIntegrityError("D_" + std::to_string(i + 1) + "^2 is not positive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h(i, j) < 0) throw DataIntegrityError("negative dual pairing");

  DualBasis out{e10, h, {}};
  for (std::size_t i = 0; i < n; ++i) out.vectors.push_back(h.column(i));
  return out;
}

const DualBasis& standard_dual_basis() {
  static const DualBasis basis = dual_basis(e10::lattice());
  return basis;
}

std::uint64_t dual_gram_checksum(const IntMatrix& dual_gram) {
  std::string text;
  for (std::size_t i = 0; i < dual_gram.rows(); ++i)
    for (std::size_t j = 0; j < dual_gram.cols(); ++j) {
      if (!text.empty()) text += ',';
      text += std::to_string(dual_gram(i, j));
    }
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string checksum_hex(std::uint64_t checksum) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(checksum));
  return buf;
}

void SearchConfig::validate() const {
  if (max_k < 1) throw InvalidArgument("max_k must be positive");
  if (min_roots < 0 || min_roots > max_roots) throw InvalidArgument("root window must satisfy 0 <= min <= max");
  if (thread_count < 1) throw InvalidArgument("thread count must be positive");
  if (witness_cap < 1) throw InvalidArgument("witness cap must be positive");
}

std::vector<Subdiagram> admissible_subdiagrams(int min_roots, int max_roots) {
  std::vector<Subdiagram> out;
  for (unsigned m = 0; m < (1u << e10::kNodes); ++m) {
    const auto mask = static_cast<e10::NodeMask>(m);
    RootSystemLabel type;
    try {
      type = e10::classify_subdiagram(mask);
    } catch (const NotClassifiable&) {
      continue;
    }
    const Int count = root_count_formula(type);
    if (count < min_roots || count > max_roots) continue;
    out.push_back({mask, std::move(type), count});
  }
  std::sort(out.begin(), out.end(), [](const Subdiagram& a, const Subdiagram& b) {
    const int pa = __builtin_popcount(a.mask), pb = __builtin_popcount(b.mask);
    if (pa != pb) return pa < pb;
    return e10::nodes_of(a.mask) < e10::nodes_of(b.mask);
  });
  return out;
}

std::vector<Int> coefficient_bounds(e10::NodeMask j, Int max_norm, const DualBasis& dual) {
  const std::size_t n = e10::kNodes;
  const IntMatrix& h = dual.dual_gram;
  std::vector<Int> b(n, 0);
  auto in_j = [&](std::size_t i) { return (j >> i) & 1u; };
  for (std::size_t i = 1; i < n; ++i)
    if (!in_j(i)) b[i] = isqrt(max_norm / h(i, i));
  if (!in_j(0)) {
    Int denom = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (!in_j(i)) denom += h(0, i);
    if (denom == 0) throw InvalidArgument("d_1 bound has an empty denominator");
    b[0] = (max_norm / 2) / denom;
  }
  return b;
}

std::set<Int> realizable_set(const WitnessMap& witnesses) {
  std::set<Int> out;
  for (const auto& [k, ws] : witnesses)
    if (!ws.empty()) out.insert(k);
  return out;
}

std::optional<std::string> witness_defect(const NefWitness& w, const DualBasis& dual) {
  const std::size_t n = e10::kNodes;
  if (w.d_coeffs.size() != n || w.c_coords.size() != n) return "coordinate vectors must have length 10";
  std::vector<int> zeros;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.d_coeffs[i] < 0) return "negative dual coefficient d_" + std::to_string(i + 1);
    if (w.d_coeffs[i] == 0) zeros.push_back(static_cast<int>(i + 1));
  }
  if (dual.dual_gram * std::span<const Int>(w.d_coeffs) != w.c_coords) return "c_coords do not match the dual coefficients";
  const Int norm = dual.e10.norm(w.c_coords);
  if (norm != 2 * w.k) return "norm " + std::to_string(norm) + " differs from 2k";
  if (is_primitive(w.c_coords) != w.primitive) return "primitivity flag is wrong";
  RootSystemLabel type;
  try {
    type = e10::classify_subdiagram(zeros);
  } catch (const NotClassifiable&) {
    return "zero set of d is not a finite ADE diagram";
  }
  if (type != w.root_type) return "root type " + w.root_type.to_string() + " should be " + type.to_string();
  if (root_count_formula(type) != w.root_count) return "root count does not match the root type";
  const Int direct = orthogonal_root_count(dual.e10, w.c_coords);
  if (direct != w.root_count) {
    return "complement has " + std::to_string(direct) + " roots, witness claims " + std::to_string(w.root_count);
  }
  return std::nullopt;
}

}  // namespace k3le::nef
