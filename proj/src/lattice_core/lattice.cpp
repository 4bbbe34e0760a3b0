#include "k3le/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "k3le/lll.hpp"

namespace k3le {

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << '(' << s.positive << ',' << s.negative << ')';
  if (s.zero) os << "+radical " << s.zero;
  return os.str();
}

Signature compute_signature(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw InvalidArgument("Gram matrix must be symmetric");
  const std::size_t n = gram.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram(i, j);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };

  Signature sig;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        swap_index(i, j);
      } else {
        j = i + 1;
        while (j < n && a[i][j] == 0) ++j;
        if (j == n) {
          ++sig.zero;
          continue;
        }
        // e_i <- e_i + e_j makes the pivot 2 a_ij.
        for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
      }
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a[r][i] == 0) continue;
      const Rational f = a[r][i] / a[i][i];
      for (std::size_t c = i; c < n; ++c) a[r][c] -= f * a[i][c];
    }
    for (std::size_t c = i + 1; c < n; ++c) {
      a[i][c] = 0;
    }
    if (a[i][i] > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw DimensionMismatch("Gram matrix must be square");
  if (!gram_.is_symmetric()) throw InvalidArgument("Gram matrix must be symmetric");
  signature_ = compute_signature(gram_);
  determinant_ = narrow(k3le::determinant(gram_));
}

bool GramLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

bool GramLattice::is_positive_definite() const {
  return rank() > 0 && signature_.positive == static_cast<int>(rank());
}

bool GramLattice::is_negative_definite() const {
  return rank() > 0 && signature_.negative == static_cast<int>(rank());
}

Int GramLattice::inner(std::span<const Int> u, std::span<const Int> v) const {
  if (u.size() != rank() || v.size() != rank()) {
    throw DimensionMismatch("vector length does not match lattice rank");
  }
  Int128 acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    Int128 row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += static_cast<Int128>(gram_(i, j)) * v[j];
    acc += row * u[i];
  }
  return narrow(acc);
}

Vector GramLattice::pairing_vector(std::span<const Int> v) const {
  if (v.size() != rank()) throw DimensionMismatch("vector length does not match lattice rank");
  return gram_ * v;
}

GramLattice GramLattice::negated() const { return GramLattice(-gram_); }

Int divisibility(const GramLattice& lattice, std::span<const Int> v) {
  if (v.size() != lattice.rank()) throw DimensionMismatch("vector length does not match lattice rank");
  if (is_zero(v)) throw InvalidArgument("divisibility of the zero vector");
  const Int g = content(lattice.pairing_vector(v));
  if (g == 0) throw DegenerateLattice("vector lies in the radical");
  return g;
}

bool is_primitive(std::span<const Int> v) {
  if (is_zero(v)) throw InvalidArgument("primitivity of the zero vector");
  return content(v) == 1;
}

bool reflective_check(const GramLattice& lattice, std::span<const Int> r) {
  if (!is_primitive(r)) throw InvalidArgument("reflective_check needs a primitive vector");
  const Int n = lattice.norm(r);
  if (n == 0) throw InvalidArgument("reflective_check needs a non-isotropic vector");
  const Int div = divisibility(lattice, r);
  return checked_mul(2, div) % n == 0;
}

std::vector<Vector> integer_kernel(const IntMatrix& rows) {
  const std::size_t m = rows.rows();
  const std::size_t n = rows.cols();
  // Column operations on [rows; I]; column j of `t` tracks the transform.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(m));
  std::vector<std::vector<BigInt>> t(n, std::vector<BigInt>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[j][i] = rows(i, j);
    t[j][j] = 1;
  }
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < m && pivot_col < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = pivot_col; j < n; ++j) {
        if (a[j][r] == 0) continue;
        if (best == n || abs(a[j][r]) < abs(a[best][r])) best = j;
      }
      if (best == n) break;
      std::swap(a[best], a[pivot_col]);
      std::swap(t[best], t[pivot_col]);
      bool done = true;
      for (std::size_t j = pivot_col + 1; j < n; ++j) {
        if (a[j][r] == 0) continue;
        const BigInt q = a[j][r] / a[pivot_col][r];
        for (std::size_t i = 0; i < m; ++i) a[j][i] -= q * a[pivot_col][i];
        for (std::size_t i = 0; i < n; ++i) t[j][i] -= q * t[pivot_col][i];
        if (a[j][r] != 0) done = false;
      }
      if (done) {
        ++pivot_col;
        break;
      }
    }
  }
  std::vector<Vector> basis;
  for (std::size_t j = pivot_col; j < n; ++j) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = narrow(t[j][i]);
    basis.push_back(std::move(v));
  }
  if (basis.size() < 2) return basis;

  // Shorten the basis in the Euclidean metric.
  const IntMatrix b = IntMatrix::from_columns(basis);
  const LllResult red = lll_reduce(b.transpose() * b);
  const IntMatrix reduced = b * red.transform;
  std::vector<Vector> out;
  for (std::size_t j = 0; j < reduced.cols(); ++j) out.push_back(reduced.column(j));
  return out;
}

Complement orthogonal_complement(const GramLattice& lattice, std::span<const Vector> vs) {
  const std::size_t n = lattice.rank();
  IntMatrix pairing(vs.size(), n);
  IntMatrix plain(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != n) throw DimensionMismatch("vector length does not match lattice rank");
    const Vector gv = lattice.pairing_vector(vs[i]);
    for (std::size_t j = 0; j < n; ++j) {
      pairing(i, j) = gv[j];
      plain(i, j) = vs[i][j];
    }
  }
  if (rational_rank(plain) != vs.size()) {
    throw InvalidArgument("orthogonal_complement needs linearly independent vectors");
  }
  std::vector<Vector> basis = integer_kernel(pairing);
  IntMatrix gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) gram(i, j) = gram(j, i) = lattice.inner(basis[i], basis[j]);
  return Complement{GramLattice(std::move(gram)), std::move(basis)};
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  return GramLattice(block_diagonal(a.gram(), b.gram()));
}

GramLattice direct_sum(std::span<const GramLattice> parts) {
  IntMatrix g;
  for (const auto& p : parts) g = block_diagonal(g, p.gram());
  return GramLattice(std::move(g));
}

GramLattice rescale(const GramLattice& lattice, Int m) {
  if (m == 0) throw InvalidArgument("rescale by zero");
  IntMatrix g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = checked_mul(g(i, j), m);
    if (g(i, i) % 2 != 0) throw InvalidArgument("rescale would produce an odd diagonal entry");
  }
  return GramLattice(std::move(g));
}

}  // namespace k3le
