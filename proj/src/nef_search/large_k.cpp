#include "k3le/nef_search.hpp"
#include "k3le/short_vectors.hpp"

namespace k3le::nef {

bool split_check(Int k, Int alpha, Int beta) {
  if (k < 1 || alpha < 1 || beta < 1) throw InvalidArgument("split check needs positive integers");
  const Int128 a = alpha, b = beta;
  return alpha != beta && a * a > k && b * b > k && 4 * a * b < static_cast<Int128>(5) * k;
}

E8Search find_e8_vector(Int n, int lo, int hi, std::uint64_t budget) {
  if (n < 1) throw InvalidArgument("find_e8_vector needs n >= 1");
  static const GramLattice e8 = builtin_gram(std::string_view("E8"));
  static const std::vector<Vector> roots = enumerate_roots(e8);
  // pairing with v is the dot product of v with G r
  static const std::vector<Vector> paired = [] {
    std::vector<Vector> out;
    for (const Vector& r : roots) out.push_back(e8.pairing_vector(r));
    return out;
  }();

  E8Search out;
  const ShortVectorEnumerator enumerator(e8.gram());
  const auto stats = enumerator.walk(
      2 * n, true,
      [&](std::span<const Int> y, Int) {
        const Vector v = enumerator.to_original(y);
        Int count = 0;
        for (const Vector& p : paired) {
          Int s = 0;
          for (std::size_t i = 0; i < 8; ++i) s += p[i] * v[i];
          if (s == 0 && ++count > hi) break;
        }
        if (count < lo || count > hi) return true;
        out.v = v;
        out.orthogonal_roots = count;
        return false;
      },
      budget);
  out.nodes = stats.nodes;
  out.budget_exhausted = stats.budget_exhausted;
  return out;
}

LargeKWitness large_k_witness(Int k, bool complete, std::uint64_t budget) {
  if (k < 4900) throw InvalidArgument("large_k_witness needs k >= 4900");
  LargeKWitness w;
  w.k = k;
  const Int root = isqrt(k);
  const Int ceil_root = root * root == k ? root : root + 1;
  w.alpha = ceil_root + 6;
  w.beta = w.alpha + 1;
  w.n = checked_sub(checked_mul(w.alpha, w.beta), k);
  if (!split_check(k, w.alpha, w.beta) || w.n < 952) {
    throw DataIntegrityError("large k construction failed its own preconditions at k = " + std::to_string(k));
  }
  if (!complete) return w;

  w.e8 = find_e8_vector(w.n, 2, 8, budget);
  if (!w.e8.v) return w;
  w.v = w.e8.v;
  Vector l{w.alpha, w.beta};
  l.insert(l.end(), w.v->begin(), w.v->end());
  w.l = l;
  static const GramLattice ambient = builtin_gram(std::string_view("II_1_9"));
  if (ambient.norm(l) != 2 * k) throw DataIntegrityError("large k witness has the wrong norm");
  w.root_count = orthogonal_root_count(ambient, l);
  return w;
}

}  // namespace k3le::nef
