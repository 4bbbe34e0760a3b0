#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "k3le/integer.hpp"

namespace k3le {

// Fincke–Pohst style enumeration of a positive-definite lattice.
//
// The Gram matrix is LLL-reduced, then decomposed exactly as
//   Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
// over the rationals. With T the common denominator of all d_i and mu_ij,
// every test reduces to integer arithmetic on
//   T^3 Q(x) = sum_i (T d_i) (T x_i + sum_{j>i} T mu_ij x_j)^2,
// so coordinate intervals are exact. Traversal order is fixed: the last
// reduced coordinate is outermost and every coordinate runs upwards.
class ShortVectorEnumerator {
 public:
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

  struct Stats {
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
    bool stopped = false;  // the visitor asked to stop
  };

  explicit ShortVectorEnumerator(const IntMatrix& positive_definite_gram);

  std::size_t rank() const { return n_; }
  const IntMatrix& reduced_gram() const { return reduced_gram_; }
  // column j = j-th reduced basis vector in input coordinates
  const IntMatrix& transform() const { return transform_; }

  Vector to_original(std::span<const Int> reduced) const { return transform_ * reduced; }

  // Range of the outermost reduced coordinate over vectors of norm <= max_norm.
  std::pair<Int, Int> outer_range(Int max_norm) const;

  // Rough count of tree nodes above the innermost level for a norm bound.
  double estimated_nodes(Int max_norm) const;

  // Visits each nonzero x (reduced coordinates) with Q(x) == norm when
  // `exact`, or 0 < Q(x) <= norm otherwise, as visit(span<const Int>, Int).
  // A visitor returning false stops the walk. When `outer_value` is set the
  // outermost coordinate is pinned to it.
  template <class Visitor>
  Stats walk(Int norm, bool exact, Visitor&& visit, std::uint64_t node_budget = kUnlimited,
             std::optional<Int> outer_value = std::nullopt) const;

  // Number of vectors with Q(x) == norm; throws BudgetExceeded when the
  // node budget runs out.
  std::uint64_t count_shell(Int norm, std::uint64_t node_budget = kUnlimited,
                            std::optional<Int> outer_value = std::nullopt) const;

 private:
  template <class Num>
  struct Coefficients {
    Num t = 1;            // T
    Num t3 = 1;           // T^3
    std::vector<Num> dp;  // T d_i
    std::vector<Num> mp;  // T mu_ij, row-major n×n, used for j > i
  };

  // int64 when T^3 * norm <= 2^40, Int128 below 2^100, BigInt otherwise.
  bool fits_small(Int norm) const;
  bool fits_narrow(Int norm) const;
  template <class Num, class Visitor>
  Stats walk_impl(const Coefficients<Num>& co, Int norm, bool exact, Visitor& visit, std::uint64_t node_budget,
                  std::optional<Int> outer_value) const;

  std::size_t n_ = 0;
  IntMatrix reduced_gram_;
  IntMatrix transform_;
  bool has_small_ = false;
  bool has_narrow_ = false;
  Coefficients<Int> small_;
  Coefficients<Int128> narrow_;
  Coefficients<BigInt> wide_;
  std::vector<double> pivots_;
};

inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
inline Int to_int(Int v) { return v; }
inline Int to_int(Int128 v) { return narrow(v); }
inline Int to_int(const BigInt& v) { return narrow(v); }

template <class Visitor>
ShortVectorEnumerator::Stats ShortVectorEnumerator::walk(Int norm, bool exact, Visitor&& visit,
                                                         std::uint64_t node_budget,
                                                         std::optional<Int> outer_value) const {
  if (n_ == 0 || norm <= 0) return {};
  if (fits_small(norm)) return walk_impl(small_, norm, exact, visit, node_budget, outer_value);
  if (fits_narrow(norm)) return walk_impl(narrow_, norm, exact, visit, node_budget, outer_value);
  return walk_impl(wide_, norm, exact, visit, node_budget, outer_value);
}

template <class Num, class Visitor>
ShortVectorEnumerator::Stats ShortVectorEnumerator::walk_impl(const Coefficients<Num>& co, Int norm, bool exact,
                                                              Visitor& visit, std::uint64_t node_budget,
                                                              std::optional<Int> outer_value) const {
  Stats stats;
  const std::size_t n = n_;
  const Num top = co.t3 * norm;
  const Num& t = co.t;

  std::vector<Int> x(n, 0);
  std::vector<Int> hi(n, 0);
  std::vector<Num> rem(n, 0);  // rem[i]: budget left when choosing x[i]
  std::vector<Num> shift(n, 0);

  auto center = [&](std::size_t i) {
    Num s = 0;
    const Num* row = co.mp.data() + i * n;
    for (std::size_t j = i + 1; j < n; ++j) s += row[j] * x[j];
    return s;
  };
  Num base0 = 0;  // sum_{j>=2} T mu_0j x_j, refreshed whenever level 1 opens
  // sets x[i] one below its lowest admissible value and hi[i] to the highest
  auto open_level = [&](std::size_t i) {
    shift[i] = center(i);
    if (i == 1) {
      base0 = 0;
      for (std::size_t j = 2; j < n; ++j) base0 += co.mp[j] * x[j];
    }
    const Num u = isqrt(rem[i] / co.dp[i]);
    Num lo = ceil_div(-u - shift[i], t);
    Num up = floor_div(u - shift[i], t);
    if (i == n - 1 && outer_value) {
      lo = std::max<Num>(lo, *outer_value);
      up = std::min<Num>(up, *outer_value);
    }
    x[i] = to_int(lo) - 1;
    hi[i] = to_int(up);
  };
  auto value_norm = [&](Num left) { return norm - to_int(Num(left / co.t3)); };

  // Exact mode solves the innermost coordinate in closed form.
  auto solve_last = [&](Num left) -> bool {
    const Num s0 = n > 1 ? Num(base0 + co.mp[1] * x[1]) : Num(0);
    if (left % co.dp[0] != 0) return true;
    const Num w = left / co.dp[0];
    const Num y = isqrt(w);
    if (y * y != w) return true;
    const Num roots[2] = {-y, y};
    for (int r = 0; r < (y == 0 ? 1 : 2); ++r) {
      const Num num = roots[r] - s0;
      if (num % t != 0) continue;
      if (++stats.nodes > node_budget) {
        stats.budget_exhausted = true;
        return false;
      }
      x[0] = to_int(Num(num / t));
      if (is_zero(x)) continue;
      if (!visit(std::span<const Int>(x), norm)) {
        stats.stopped = true;
        return false;
      }
    }
    return true;
  };

  rem[n - 1] = top;
  if (exact && n == 1) {
    solve_last(top);
    return stats;
  }
  std::size_t i = n - 1;
  open_level(i);
  while (true) {
    if (++x[i] > hi[i]) {
      if (i == n - 1) break;
      ++i;
      continue;
    }
    if (++stats.nodes > node_budget) {
      stats.budget_exhausted = true;
      break;
    }
    const Num y = t * x[i] + shift[i];
    const Num left = rem[i] - co.dp[i] * y * y;
    if (i == 0) {
      if (is_zero(x)) continue;
      if (!visit(std::span<const Int>(x), value_norm(left))) {
        stats.stopped = true;
        break;
      }
      continue;
    }
    if (exact && i == 1) {
      x[0] = 0;
      if (!solve_last(left)) break;
      continue;
    }
    rem[i - 1] = left;
    --i;
    open_level(i);
  }
  return stats;
}

}  // namespace k3le
