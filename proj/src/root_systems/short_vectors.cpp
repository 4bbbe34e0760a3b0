#include "k3le/short_vectors.hpp"

#include <cmath>
#include <numbers>

#include "k3le/lll.hpp"

namespace k3le {

ShortVectorEnumerator::ShortVectorEnumerator(const IntMatrix& gram) : n_(gram.rows()) {
  if (!gram.is_symmetric()) throw InvalidArgument("enumeration needs a symmetric Gram matrix");
  if (n_ == 0) return;
  LllResult red = lll_reduce(gram);
  reduced_gram_ = std::move(red.gram);
  transform_ = std::move(red.transform);

  // q(i,i) = d_i, q(i,j) = mu_ij for j > i
  std::vector<std::vector<Rational>> q(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) q[i][j] = reduced_gram_(i, j);
  for (std::size_t i = 0; i < n_; ++i) {
    if (q[i][i] <= 0) throw InvalidArgument("enumeration needs a positive-definite Gram matrix");
    for (std::size_t j = i + 1; j < n_; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n_; ++k)
      for (std::size_t l = k; l < n_; ++l) q[k][l] -= q[k][i] * q[i][l];
  }

  BigInt lcm = 1;
  auto absorb = [&](const Rational& r) {
    const BigInt den = boost::multiprecision::denominator(r);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) absorb(q[i][j]);
  wide_.t = lcm;
  wide_.t3 = lcm * lcm * lcm;
  wide_.dp.resize(n_);
  wide_.mp.assign(n_ * n_, 0);
  pivots_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    wide_.dp[i] = boost::multiprecision::numerator(Rational(q[i][i] * lcm));
    pivots_[i] = static_cast<double>(q[i][i]);
    for (std::size_t j = i + 1; j < n_; ++j)
      wide_.mp[i * n_ + j] = boost::multiprecision::numerator(Rational(q[i][j] * lcm));
  }

  // narrow copy when every intermediate of a norm-1 walk fits easily
  const BigInt limit = BigInt(1) << 100;
  if (wide_.t3 < limit) {
    try {
      narrow_.t = static_cast<Int128>(narrow(wide_.t));
      narrow_.t3 = narrow_.t * narrow_.t * narrow_.t;
      for (const BigInt& v : wide_.dp) narrow_.dp.push_back(narrow(v));
      for (const BigInt& v : wide_.mp) narrow_.mp.push_back(narrow(v));
      has_narrow_ = true;
    } catch (const OverflowError&) {
      narrow_ = {};
    }
  }
  if (has_narrow_ && narrow_.t3 <= (static_cast<Int128>(1) << 40)) {
    bool ok = true;
    for (Int128 v : narrow_.mp) ok = ok && v < (Int128{1} << 20) && v > -(Int128{1} << 20);
    for (Int128 v : narrow_.dp) ok = ok && v < (Int128{1} << 40);
    if (ok) {
      has_small_ = true;
      small_.t = static_cast<Int>(narrow_.t);
      small_.t3 = static_cast<Int>(narrow_.t3);
      for (Int128 v : narrow_.dp) small_.dp.push_back(static_cast<Int>(v));
      for (Int128 v : narrow_.mp) small_.mp.push_back(static_cast<Int>(v));
    }
  }
}

bool ShortVectorEnumerator::fits_small(Int norm) const {
  return has_small_ && norm > 0 && small_.t3 <= (Int{1} << 40) / norm;
}

bool ShortVectorEnumerator::fits_narrow(Int norm) const {
  if (!has_narrow_ || norm <= 0) return false;
  const Int128 limit = static_cast<Int128>(1) << 100;
  return narrow_.t3 <= limit / norm;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(BigInt(-a), b); }

std::pair<Int, Int> ShortVectorEnumerator::outer_range(Int max_norm) const {
  if (n_ == 0 || max_norm <= 0) return {0, -1};
  const std::size_t i = n_ - 1;
  const BigInt u = isqrt(BigInt(wide_.t3 * max_norm / wide_.dp[i]));
  return {narrow(ceil_div(BigInt(-u), wide_.t)), narrow(floor_div(u, wide_.t))};
}

double ShortVectorEnumerator::estimated_nodes(Int max_norm) const {
  if (n_ <= 1) return 1.0;
  // lattice points of the projection onto levels 1..n-1 inside the ball
  const double m = static_cast<double>(n_ - 1);
  double det = 1.0;
  for (std::size_t i = 1; i < n_; ++i) det *= pivots_[i];
  const double ball = std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0 + 1.0);
  return ball * std::pow(static_cast<double>(max_norm), m / 2.0) / std::sqrt(det);
}

std::uint64_t ShortVectorEnumerator::count_shell(Int norm, std::uint64_t node_budget,
                                                 std::optional<Int> outer_value) const {
  std::uint64_t count = 0;
  const Stats stats = walk(
      norm, true,
      [&](std::span<const Int>, Int) {
        ++count;
        return true;
      },
      node_budget, outer_value);
  if (stats.budget_exhausted) throw BudgetExceeded("shell enumeration exceeded its node budget");
  return count;
}

}  // namespace k3le
