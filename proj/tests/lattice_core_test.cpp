#include <gtest/gtest.h>

#include <random>

#include "k3le/lattice.hpp"
#include "k3le/lattice_io.hpp"
#include "k3le/lll.hpp"
#include "k3le/normal_forms.hpp"
#include "k3le/root_system.hpp"

using namespace k3le;

namespace {

GramLattice named(const char* s) { return builtin_gram(std::string_view(s)); }

// Random even symmetric matrix with small entries.
IntMatrix random_even_gram(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> off(-3, 3), diag(-4, 4);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 2 * diag(rng);
    for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = off(rng);
  }
  return g;
}

}  // namespace

TEST(Inner, HyperbolicPlane) {
  const GramLattice u = named("U");
  const Vector e{1, 0}, f{0, 1};
  EXPECT_EQ(u.inner(e, f), 1);
  EXPECT_EQ(u.inner(e, e), 0);
  EXPECT_EQ(u.inner(f, e), u.inner(e, f));
}

TEST(Inner, SimpleRootOfE8Minus1) {
  const GramLattice e8 = named("E8(-1)");
  Vector r(8, 0);
  r[3] = 1;
  EXPECT_EQ(e8.norm(r), -2);
}

TEST(Inner, DimensionMismatchThrows) {
  const GramLattice u = named("U");
  EXPECT_THROW(u.inner(Vector{1, 0, 0}, Vector{1, 0}), DimensionMismatch);
}

TEST(Inner, SymmetricAndEvenOnRandomVectors) {
  std::mt19937 rng(7);
  const GramLattice l = named("U+E8(-1)+<10>");
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 200; ++t) {
    Vector u(l.rank()), v(l.rank());
    for (auto& x : u) x = c(rng);
    for (auto& x : v) x = c(rng);
    EXPECT_EQ(l.inner(u, v), l.inner(v, u));
    EXPECT_EQ(l.norm(u) % 2, 0);
  }
}

TEST(Divisibility, Examples) {
  const GramLattice u = named("U");
  EXPECT_EQ(divisibility(u, Vector{1, 0}), 1);
  EXPECT_EQ(divisibility(u, Vector{2, 2}), 2);
  EXPECT_EQ(divisibility(named("<6>"), Vector{1}), 6);
  EXPECT_THROW(divisibility(u, Vector{0, 0}), InvalidArgument);
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive(Vector{1, 0, 0, 0}));
  EXPECT_FALSE(is_primitive(Vector{2, 4, 6}));
  EXPECT_TRUE(is_primitive(Vector{3, 5}));
  EXPECT_THROW(is_primitive(Vector{0, 0}), InvalidArgument);
}

TEST(Reflective, RootsAreReflective) {
  const GramLattice e8 = named("E8(-1)");
  for (std::size_t i = 0; i < 8; ++i) {
    Vector r(8, 0);
    r[i] = 1;
    EXPECT_TRUE(reflective_check(e8, r));
  }
}

TEST(Reflective, MinusFourGenerator) { EXPECT_TRUE(reflective_check(named("U+<-4>"), Vector{0, 0, 1})); }

TEST(Reflective, NormMinusSixDivisibilityOne) {
  const GramLattice l = named("U+<-12>");
  const Vector r{1, 3, 1};
  ASSERT_EQ(l.norm(r), -6);
  ASSERT_EQ(divisibility(l, r), 1);
  EXPECT_FALSE(reflective_check(l, r));
}

TEST(Reflective, ScanFindsTheNormMinusSixExample) {
  // small-coefficient scan for a primitive r with r^2 = -6 and div 1
  const GramLattice l = named("U+<-12>");
  bool found = false;
  for (Int a = -3; a <= 3 && !found; ++a)
    for (Int b = -3; b <= 3 && !found; ++b)
      for (Int c = -3; c <= 3 && !found; ++c) {
        const Vector r{a, b, c};
        if (is_zero(r) || !is_primitive(r) || l.norm(r) != -6) continue;
        if (divisibility(l, r) == 1) found = !reflective_check(l, r);
      }
  EXPECT_TRUE(found);
}

TEST(Reflective, RejectsBadInput) {
  const GramLattice u = named("U");
  EXPECT_THROW(reflective_check(u, Vector{2, 0}), InvalidArgument);
  EXPECT_THROW(reflective_check(u, Vector{1, 0}), InvalidArgument);
}

TEST(Reflective, DivisibilityChainOnReflectiveVectors) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  const GramLattice l = named("U+2E8(-1)+<10>");
  int seen = 0;
  for (int t = 0; t < 4000; ++t) {
    Vector r(l.rank(), 0);
    for (std::size_t i : {0u, 1u, 18u, 5u}) r[i] = c(rng);
    if (is_zero(r) || !is_primitive(r) || l.norm(r) == 0) continue;
    if (!reflective_check(l, r)) continue;
    ++seen;
    const Int d = divisibility(l, r), n = l.norm(r);
    EXPECT_EQ(n % d, 0);
    EXPECT_EQ((2 * d) % n, 0);
  }
  EXPECT_GT(seen, 10);
}

TEST(Complement, RootInE8GivesE7) {
  const GramLattice e8 = named("E8(-1)");
  const Vector r{1, 0, 0, 0, 0, 0, 0, 0};
  const Complement c = orthogonal_complement(e8, std::span<const Vector>(&r, 1));
  EXPECT_EQ(c.lattice.rank(), 7u);
  EXPECT_EQ(enumerate_roots(c.lattice).size(), 126u);
  for (const auto& b : c.basis) EXPECT_EQ(e8.inner(b, r), 0);
}

TEST(Complement, IsotropicVectorInUIsDegenerate) {
  const GramLattice u = named("U");
  const Vector e{1, 0};
  const Complement c = orthogonal_complement(u, std::span<const Vector>(&e, 1));
  ASSERT_EQ(c.lattice.rank(), 1u);
  EXPECT_TRUE(c.lattice.is_degenerate());
  EXPECT_EQ(c.lattice.gram(), (IntMatrix{{0}}));
  EXPECT_EQ(c.basis[0], (Vector{1, 0}));
}

TEST(Complement, PositiveVectorInSignatureOneNine) {
  const GramLattice l = named("II_1_9");
  const Vector d{1, 3, 0, 0, 0, 0, 0, 0, 0, 0};
  ASSERT_GT(l.norm(d), 0);
  const Complement c = orthogonal_complement(l, std::span<const Vector>(&d, 1));
  EXPECT_EQ(c.lattice.rank(), 9u);
  EXPECT_TRUE(c.lattice.is_negative_definite());
}

TEST(Complement, DependentInputThrows) {
  const GramLattice l = named("U+<-2>");
  const std::vector<Vector> vs = {{1, 0, 0}, {2, 0, 0}};
  EXPECT_THROW(orthogonal_complement(l, vs), InvalidArgument);
}

TEST(Complement, RankAndOrthogonalityOnRandomInput) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-3, 3);
  const GramLattice l = named("U+E8(-1)+<6>");
  for (int t = 0; t < 30; ++t) {
    std::vector<Vector> vs(2, Vector(l.rank()));
    for (auto& v : vs)
      for (auto& x : v) x = c(rng);
    if (rational_rank(IntMatrix::from_columns(vs)) < 2) continue;
    const Complement comp = orthogonal_complement(l, vs);
    EXPECT_EQ(comp.lattice.rank(), l.rank() - 2);
    for (const auto& b : comp.basis)
      for (const auto& v : vs) EXPECT_EQ(l.inner(b, v), 0);
  }
}

TEST(Complement, SaturatedSoPrimitive) {
  const GramLattice l = named("U+<-2>+<-2>");
  const Vector v{2, 2, 1, 1};
  const Complement c = orthogonal_complement(l, std::span<const Vector>(&v, 1));
  EXPECT_EQ(rational_rank(IntMatrix::from_columns(c.basis)), 3u);
  // a primitive sublattice has all Smith factors equal to 1
  const SmithForm s = smith_normal_form(IntMatrix::from_columns(c.basis));
  for (const auto& d : s.diagonal) EXPECT_EQ(d, 1);
}

TEST(Complement, TwoElementaryComplementInL2k) {
  // r = x w + k y with k | 1 + x^2 and y a root: r^2 = -2k, div(r) = k
  const Int k = 5, x = 2;
  const GramLattice l = named("U+2E8(-1)+<10>");
  Vector r(l.rank(), 0);
  r[18] = x;
  r[2] = k;
  ASSERT_EQ(l.norm(r), -2 * k);
  ASSERT_EQ(divisibility(l, r), k);
  const Complement c = orthogonal_complement(l, std::span<const Vector>(&r, 1));
  EXPECT_EQ(c.lattice.signature(), (Signature{2, 16, 0}));
  EXPECT_EQ(std::abs(c.lattice.determinant()), 4);
}

TEST(DirectSum, DeterminantAndSignature) {
  EXPECT_EQ(direct_sum(named("U"), named("<-2>")).determinant(), 2);
  const GramLattice l = direct_sum(std::vector<GramLattice>{named("U"), named("2E8(-1)"), named("<10>")});
  EXPECT_EQ(l.signature(), (Signature{2, 17, 0}));
  EXPECT_EQ(std::abs(l.determinant()), 10);
}

TEST(Rescale, Examples) {
  EXPECT_EQ(rescale(named("A1"), -1).gram(), (IntMatrix{{-2}}));
  EXPECT_THROW(rescale(named("<3>"), 1), InvalidArgument);
  EXPECT_THROW(rescale(named("A1"), 0), InvalidArgument);
  EXPECT_EQ(rescale(named("U"), 2).gram(), (IntMatrix{{0, 2}, {2, 0}}));
}

TEST(Lattice, SignatureMatchesDiagonalisation) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix g = random_even_gram(rng, 1 + t % 6);
    const GramLattice l(g);
    const Signature s = compute_signature(g);
    EXPECT_EQ(l.signature(), s);
    EXPECT_EQ(static_cast<std::size_t>(s.positive + s.negative + s.zero), g.rows());
    EXPECT_EQ(s.zero == 0, !l.is_degenerate());
  }
}

TEST(Lattice, RejectsNonSymmetric) { EXPECT_THROW(GramLattice(IntMatrix{{2, 1}, {0, 2}}), InvalidArgument); }

TEST(Lll, ReducedGramIsCongruent) {
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const GramLattice e8 = named("E8");
    std::uniform_int_distribution<int> c(-2, 2);
    // scramble by a unimodular upper-triangular matrix
    IntMatrix u = IntMatrix::identity(8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j) u(i, j) = c(rng);
    const IntMatrix g = u.transpose() * e8.gram() * u;
    const LllResult r = lll_reduce(g);
    EXPECT_EQ(r.transform.transpose() * g * r.transform, r.gram);
    const BigInt det = determinant(r.transform);
    EXPECT_TRUE(det == 1 || det == -1);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(r.gram(i, i), 2);
  }
}

TEST(LatticeIo, RoundTrip) {
  const GramLattice l = named("U+<-20>");
  const auto j = lattice_to_json(l);
  EXPECT_EQ(j.at("rank"), 3);
  EXPECT_EQ(lattice_from_json(j), l);
  EXPECT_THROW(lattice_from_json(nlohmann::json{{"rank", 2}, {"gram", {{2}}}}), DimensionMismatch);
}

TEST(Names, Parser) {
  EXPECT_EQ(named("A2").gram(), (IntMatrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(named("E8(−1)").gram(), named("E8(-1)").gram());
  EXPECT_EQ(named("U ⊕ <-4>").rank(), 3u);
  EXPECT_EQ(named("2E8").rank(), 16u);
  EXPECT_EQ(named("2A1(-1)").gram(), (IntMatrix{{-2, 0}, {0, -2}}));
  EXPECT_THROW(named("F4"), InvalidArgument);
  EXPECT_THROW(named("D3"), InvalidArgument);
  EXPECT_THROW(named("E9"), InvalidArgument);
  EXPECT_THROW(named(""), InvalidArgument);
}
