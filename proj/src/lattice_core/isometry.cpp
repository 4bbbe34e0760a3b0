#include "k3le/isometry.hpp"

#include <cmath>
#include <map>
#include <tuple>
#include <utility>

#include "k3le/discriminant.hpp"

namespace k3le {

std::string to_string(IsometryStatus s) {
  switch (s) {
    case IsometryStatus::found:
      return "found";
    case IsometryStatus::not_isometric:
      return "not_isometric";
    case IsometryStatus::not_found_within_bound:
      return "not_found_within_bound";
  }
  return "unknown";
}

bool is_isometry(const GramLattice& from, const GramLattice& to, const IntMatrix& b) {
  if (b.rows() != from.rank() || b.cols() != to.rank()) return false;
  if (b.transpose() * from.gram() * b != to.gram()) return false;
  const BigInt det = determinant(b);
  return det == 1 || det == -1;
}

namespace {

constexpr double kMaxBoxSize = 5e7;

class BasisImageSearch {
 public:
  BasisImageSearch(const GramLattice& from, const GramLattice& to, Int bound)
      : from_(from), to_(to), bound_(bound) {}

  std::optional<IntMatrix> run() {
    collect_candidates();
    for (std::size_t i = 0; i + 1 < to_.rank() || (to_.rank() == 1 && i == 0); ++i) {
      if (candidates_[to_.gram()(i, i)].empty()) return std::nullopt;
    }
    chosen_.clear();
    if (!extend(0)) return std::nullopt;
    return IntMatrix::from_columns(chosen_);
  }

 private:
  void collect_candidates() {
    const std::size_t n = from_.rank();
    std::map<Int, bool> wanted;
    for (std::size_t i = 0; i + 1 < n || (n == 1 && i == 0); ++i) wanted[to_.gram()(i, i)] = true;
    Vector x(n, -bound_);
    while (true) {
      if (!is_zero(x)) {
        const Int norm = from_.norm(x);
        if (wanted.count(norm)) candidates_[norm].push_back(x);
      }
      std::size_t i = 0;
      while (i < n) {
        if (++x[i] <= bound_) break;
        x[i] = -bound_;
        ++i;
      }
      if (i == n) break;
    }
  }

  bool extend(std::size_t col) {
    if (col == to_.rank()) {
      const IntMatrix b = IntMatrix::from_columns(chosen_);
      const BigInt det = determinant(b);
      return det == 1 || det == -1;
    }
    if (col + 1 == to_.rank() && col > 0) return solve_last(col);
    for (const Vector& v : candidates_[to_.gram()(col, col)]) {
      bool ok = true;
      for (std::size_t j = 0; j < col && ok; ++j) ok = from_.inner(v, chosen_[j]) == to_.gram()(col, j);
      if (!ok) continue;
      chosen_.push_back(v);
      if (extend(col + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  // The last column v is fixed up to a line by its n-1 pairings with the
  // chosen columns; the norm condition is then a quadratic along that line.
  bool solve_last(std::size_t col) {
    const std::size_t n = from_.rank();
    IntMatrix system(col, n + 1);
    for (std::size_t j = 0; j < col; ++j) {
      const Vector p = from_.pairing_vector(chosen_[j]);
      for (std::size_t c = 0; c < n; ++c) system(j, c) = p[c];
      system(j, n) = -to_.gram()(col, j);
    }
    const std::vector<Vector> kernel = integer_kernel(system);
    if (kernel.size() != 2) return false;
    const Int s1 = kernel[0][n];
    const Int s2 = kernel[1][n];
    const auto [g, x1, x2] = extended_gcd(s1, s2);
    if (g != 1) return false;
    Vector v0(n), dir(n);
    for (std::size_t c = 0; c < n; ++c) {
      v0[c] = checked_add(checked_mul(x1, kernel[0][c]), checked_mul(x2, kernel[1][c]));
      dir[c] = checked_sub(checked_mul(s2, kernel[0][c]), checked_mul(s1, kernel[1][c]));
    }
    const BigInt a = from_.norm(dir);
    const BigInt b = from_.inner(v0, dir);
    const BigInt c = BigInt(from_.norm(v0)) - to_.gram()(col, col);
    std::vector<BigInt> ts;
    if (a == 0) {
      if (b == 0) return false;  // a whole line of solutions is impossible for non-degenerate targets
      if (c % (2 * b) == 0) ts.push_back(-c / (2 * b));
    } else {
      const BigInt disc = b * b - a * c;
      if (disc < 0) return false;
      const BigInt root = boost::multiprecision::sqrt(disc);
      if (root * root != disc) return false;
      for (const BigInt& num : {BigInt(-b - root), BigInt(-b + root)})
        if (num % a == 0) ts.push_back(num / a);
    }
    for (const BigInt& t : ts) {
      const Int tt = narrow(t);
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = checked_add(v0[k], checked_mul(tt, dir[k]));
      chosen_.push_back(v);
      const BigInt det = determinant(IntMatrix::from_columns(chosen_));
      if (det == 1 || det == -1) return true;
      chosen_.pop_back();
    }
    return false;
  }

  static std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const Int q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
      old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
  }

  const GramLattice& from_;
  const GramLattice& to_;
  Int bound_;
  std::map<Int, std::vector<Vector>> candidates_;
  std::vector<Vector> chosen_;
};

}  // namespace

IsometryResult isometry_search(const GramLattice& from, const GramLattice& to, Int coeff_bound) {
  IsometryResult result;
  auto reject = [&](std::string why) {
    result.status = IsometryStatus::not_isometric;
    result.reason = std::move(why);
    return result;
  };
  if (coeff_bound < 1) throw InvalidArgument("isometry coefficient bound must be positive");
  if (from.rank() != to.rank()) return reject("ranks differ");
  if (from.determinant() != to.determinant()) return reject("determinants differ");
  if (from.signature() != to.signature()) return reject("signatures differ");
  if (from.is_even() != to.is_even()) return reject("one lattice is even, the other odd");
  if (!from.is_degenerate() &&
      discriminant_group(from).invariant_factors != discriminant_group(to).invariant_factors) {
    return reject("discriminant groups differ");
  }

  if (from.gram() == to.gram()) {
    result.status = IsometryStatus::found;
    result.transform = IntMatrix::identity(from.rank());
    return result;
  }
  const double box = std::pow(2.0 * static_cast<double>(coeff_bound) + 1.0, static_cast<double>(from.rank()));
  if (box > kMaxBoxSize) throw BudgetExceeded("isometry search box is too large for this rank and bound");

  auto b = BasisImageSearch(from, to, coeff_bound).run();
  if (b && is_isometry(from, to, *b)) {
    result.status = IsometryStatus::found;
    result.transform = std::move(b);
  } else {
    result.status = IsometryStatus::not_found_within_bound;
    result.reason = "no isometry with coefficients bounded by " + std::to_string(coeff_bound);
  }
  return result;
}

}  // namespace k3le
