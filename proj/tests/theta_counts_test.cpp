#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "k3le/short_vectors.hpp"
#include "k3le/theta.hpp"

using namespace k3le;
using namespace k3le::theta;

namespace {

// Points y of Z^m with sum y_i^2 <= bound accepted by `keep`, bucketed by sum y_i^2.
std::vector<std::uint64_t> ball_counts(std::size_t m, Int bound, const std::function<bool(const Vector&)>& keep) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(bound) + 1, 0);
  Vector y(m, 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int used) {
    if (i == m) {
      if (keep(y)) ++out[static_cast<std::size_t>(used)];
      return;
    }
    for (Int v = 0; used + v * v <= bound; ++v) {
      y[i] = v;
      rec(i + 1, used + v * v);
      if (v == 0) continue;
      y[i] = -v;
      rec(i + 1, used + v * v);
    }
    y[i] = 0;
  };
  rec(0, 0);
  return out;
}

Int coordinate_sum(const Vector& y) { return std::accumulate(y.begin(), y.end(), Int{0}); }

// E8 in doubled coordinates: all even or all odd, coordinate sum divisible by 4.
bool in_e8(const Vector& y) {
  const bool parity = (y[0] & 1) != 0;
  for (Int v : y)
    if (((v & 1) != 0) != parity) return false;
  return coordinate_sum(y) % 4 == 0;
}

}  // namespace

TEST(Theta, GoldenShellCounts) {
  std::ifstream in(std::string(K3LE_GOLDEN_DIR) + "/shell_counts.csv");
  ASSERT_TRUE(in);
  std::string line;
  std::getline(in, line);
  ASSERT_EQ(line, "n,E8,E7,E6,D6");
  const RepNumberTable e8 = representation_table("E8", 30, 2);
  const RepNumberTable e7 = representation_table("E7", 30, 2);
  const RepNumberTable e6 = representation_table("E6", 30, 2);
  const RepNumberTable d6 = representation_table("D6", 30, 2);
  int rows = 0;
  while (std::getline(in, line)) {
    std::stringstream s(line);
    std::string cell;
    std::vector<std::uint64_t> v;
    while (std::getline(s, cell, ',')) v.push_back(std::stoull(cell));
    ASSERT_EQ(v.size(), 5u);
    const auto n = static_cast<std::size_t>(v[0]);
    EXPECT_EQ(e8.counts[n], v[1]) << "E8 n=" << n;
    EXPECT_EQ(e7.counts[n], v[2]) << "E7 n=" << n;
    EXPECT_EQ(e6.counts[n], v[3]) << "E6 n=" << n;
    EXPECT_EQ(d6.counts[n], v[4]) << "D6 n=" << n;
    ++rows;
  }
  EXPECT_EQ(rows, 30);
}

TEST(Theta, E8IsTwoHundredFortySigmaThree) {
  const RepNumberTable t = representation_table("E8", 30);
  EXPECT_EQ(t.counts[0], 1u);
  for (Int n = 1; n <= 30; ++n) {
    std::uint64_t sigma = 0;
    for (Int d = 1; d <= n; ++d)
      if (n % d == 0) sigma += static_cast<std::uint64_t>(d * d * d);
    EXPECT_EQ(t.counts[static_cast<std::size_t>(n)], 240 * sigma) << n;
  }
}

TEST(Theta, BallScanOracle) {
  // E7 and E6 as the parts of E8 orthogonal to (2,-2,0,..) and also (0,2,-2,0,..)
  const auto e8 = ball_counts(8, 48, in_e8);
  const auto e7 = ball_counts(8, 48, [](const Vector& y) { return in_e8(y) && y[0] == y[1]; });
  const auto e6 = ball_counts(8, 48, [](const Vector& y) { return in_e8(y) && y[0] == y[1] && y[1] == y[2]; });
  for (Int n = 1; n <= 6; ++n) {
    const auto idx = static_cast<std::size_t>(8 * n);  // doubled coordinates scale norms by 4
    EXPECT_EQ(representation_number("E8", n), e8[idx]) << n;
    EXPECT_EQ(representation_number("E7", n), e7[idx]) << n;
    EXPECT_EQ(representation_number("E6", n), e6[idx]) << n;
  }
  const auto d6 = ball_counts(6, 20, [](const Vector& y) { return coordinate_sum(y) % 2 == 0; });
  const auto a3 = ball_counts(4, 20, [](const Vector& y) { return coordinate_sum(y) == 0; });
  const auto a5 = ball_counts(6, 20, [](const Vector& y) { return coordinate_sum(y) == 0; });
  for (Int n = 1; n <= 10; ++n) {
    const auto idx = static_cast<std::size_t>(2 * n);
    EXPECT_EQ(representation_number("D6", n), d6[idx]) << n;
    EXPECT_EQ(representation_number("A3", n), a3[idx]) << n;
    EXPECT_EQ(representation_number("A5", n), a5[idx]) << n;
  }
}

TEST(Theta, RankOneSquares) {
  const RepNumberTable t = representation_table("A1", 50);
  for (Int n = 1; n <= 50; ++n) {
    const Int r = isqrt(n);
    EXPECT_EQ(t.counts[static_cast<std::size_t>(n)], r * r == n ? 2u : 0u) << n;
  }
}

TEST(Theta, OddNormsVanishOnEvenLattices) {
  const ShortVectorEnumerator e(builtin_gram("E7").gram());
  for (Int norm = 1; norm <= 21; norm += 2) EXPECT_EQ(e.count_shell(norm), 0u);
}

TEST(Theta, SerialEqualsParallel) {
  const GramLattice e7 = builtin_gram("E7");
  for (Int n : {1, 7, 25, 60}) {
    const auto s = representation_number_serial(e7, n);
    EXPECT_EQ(representation_number(e7, n, 4), s) << n;
    EXPECT_EQ(representation_number(e7, n, 3), s) << n;
  }
  EXPECT_EQ(representation_table("E6", 20, 4).counts, representation_table("E6", 20, 1).counts);
}

TEST(Theta, TableCsv) {
  const std::string csv = representation_table("E8", 2).to_csv();
  EXPECT_EQ(csv, "n,count\n1,240\n2,2160\n");
}

TEST(Theta, BudgetGuard) {
  EXPECT_THROW(representation_number("E7", 420), BudgetExceeded);
  EXPECT_THROW(representation_number("E7", 50, 1, 10.0), BudgetExceeded);
  EXPECT_THROW(representation_number("U", 1), InvalidArgument);
  EXPECT_THROW(representation_number("E7", 0), InvalidArgument);
}

TEST(Inequality, FailsForSmallN) {
  for (Int n = 1; n <= 60; ++n) {
    const InequalityResult r = inequality_check(n, 2);
    EXPECT_FALSE(r.holds) << n;
    EXPECT_EQ(r.lhs, 2 * r.e7);
    EXPECT_EQ(r.rhs, 28 * r.e6 + 63 * r.d6);
  }
  const InequalityResult first = inequality_check(1);
  EXPECT_EQ(first.e7, 126u);
  EXPECT_EQ(first.e6, 72u);
  EXPECT_EQ(first.d6, 60u);
}

TEST(Threshold, LeastSolution) {
  EXPECT_FALSE(threshold_predicate(951));
  EXPECT_TRUE(threshold_predicate(952));
  EXPECT_TRUE(threshold_predicate(100000));
  const ThresholdResult t = analytic_threshold();
  EXPECT_EQ(t.n, 952);
  EXPECT_EQ(t.e7_constant, "123.8");
  EXPECT_EQ(t.e6_constant, "103.69");
  EXPECT_EQ(t.d6_constant, "75.13");
}

TEST(Threshold, ParseDecimal) {
  EXPECT_EQ(parse_decimal("103.69"), Rational(10369, 100));
  EXPECT_EQ(parse_decimal("75.13"), Rational(7513, 100));
  EXPECT_EQ(parse_decimal("12"), Rational(12));
  EXPECT_THROW(parse_decimal("1.2.3"), InvalidArgument);
  EXPECT_THROW(parse_decimal(""), InvalidArgument);
}

TEST(Mass, Identity) {
  EXPECT_TRUE(mass_identity_holds(MassIdentity{}));
  EXPECT_TRUE(mass_identity_check());
  EXPECT_EQ(mass_of_genus_formula(), Rational(1, 2229534720LL));
  MassIdentity off;
  off.d10_term += 1;
  EXPECT_FALSE(mass_identity_holds(off));
  MassIdentity off_total;
  off_total.total += 1;
  EXPECT_FALSE(mass_identity_holds(off_total));
}

TEST(Roots, PairsInE7AndComplements) {
  EXPECT_EQ(a1_pair_count_in_E7(), 63);
  const GramLattice e7 = builtin_gram("E7");
  const auto roots = enumerate_roots(e7);
  std::mt19937 rng(63);
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  for (int t = 0; t < 5; ++t) EXPECT_EQ(orthogonal_root_count(e7, roots[pick(rng)]), 60);
}
