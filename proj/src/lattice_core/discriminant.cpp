#include "k3le/discriminant.hpp"

#include <set>

#include "k3le/normal_forms.hpp"

namespace k3le {

namespace {

Int mod_pos(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Fraction big_fraction_mod(const BigInt& num, const BigInt& den, Int modulus) {
  // num/den modulo `modulus`, without forming large intermediates
  const BigInt wrapped = num % (den * modulus);
  return reduce_mod(Fraction(narrow(wrapped), narrow(den)), modulus);
}

}  // namespace

Fraction reduce_mod(const Fraction& x, Int modulus) {
  const Int n = x.numerator();
  const Int d = x.denominator();
  const Int period = checked_mul(d, modulus);
  return Fraction(mod_pos(n, period), d);
}

Int DiscriminantGroup::order() const {
  Int o = 1;
  for (Int f : invariant_factors) o = checked_mul(o, f);
  return o;
}

Fraction DiscriminantGroup::q(std::span<const Int> a) const {
  if (a.size() != invariant_factors.size()) throw DimensionMismatch("element has wrong length");
  const Int modulus = even ? 2 : 1;
  Fraction acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    acc = reduce_mod(acc + Fraction(checked_mul(a[i], a[i])) * q_values[i], modulus);
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      acc = reduce_mod(acc + Fraction(checked_mul(2, checked_mul(a[i], a[j]))) * bilinear[i][j], modulus);
    }
  }
  return acc;
}

Fraction DiscriminantGroup::b(std::span<const Int> x, std::span<const Int> y) const {
  Fraction acc(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      acc = reduce_mod(acc + Fraction(checked_mul(x[i], y[j])) * bilinear[i][j], 1);
    }
  }
  return acc;
}

std::vector<Vector> DiscriminantGroup::elements() const {
  std::vector<Vector> out;
  Vector a(invariant_factors.size(), 0);
  while (true) {
    out.push_back(a);
    std::size_t i = 0;
    while (i < a.size()) {
      if (++a[i] < invariant_factors[i]) break;
      a[i] = 0;
      ++i;
    }
    if (i == a.size()) break;
  }
  return out;
}

DiscriminantGroup discriminant_group(const GramLattice& lattice) {
  if (lattice.is_degenerate()) throw DegenerateLattice("discriminant group of a degenerate lattice");
  const std::size_t n = lattice.rank();
  const SmithForm snf = smith_normal_form(lattice.gram());

  // M = Vᵀ G V
  const auto& v = snf.right;
  std::vector<std::vector<BigInt>> gv(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += lattice.gram()(i, k) * v[k][j];
      gv[i][j] = acc;
    }
  auto m_entry = [&](std::size_t i, std::size_t j) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += v[k][i] * gv[k][j];
    return acc;
  };

  DiscriminantGroup group;
  group.even = lattice.is_even();
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] > 1) index.push_back(i);
  }
  for (std::size_t i : index) {
    group.invariant_factors.push_back(narrow(snf.diagonal[i]));
    Vector numer(n);
    for (std::size_t k = 0; k < n; ++k) numer[k] = narrow(v[k][i]);
    group.generator_numerators.push_back(std::move(numer));
  }
  const std::size_t m = index.size();
  group.q_values.resize(m);
  group.bilinear.assign(m, std::vector<Fraction>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const BigInt entry = m_entry(index[a], index[b]);
      const BigInt den = snf.diagonal[index[a]] * snf.diagonal[index[b]];
      group.bilinear[a][b] = group.bilinear[b][a] = big_fraction_mod(entry, den, 1);
      if (a == b) group.q_values[a] = big_fraction_mod(entry, den, group.even ? 2 : 1);
    }
  }
  return group;
}

bool is_two_elementary(const GramLattice& lattice) {
  for (Int f : discriminant_group(lattice).invariant_factors)
    if (f != 2) return false;
  return true;
}

namespace {

class FormIsomorphismSearch {
 public:
  FormIsomorphismSearch(const DiscriminantGroup& from, const DiscriminantGroup& to, bool flip)
      : from_(from), to_(to), sign_(flip ? -1 : 1), modulus_(from.even && to.even ? 2 : 1) {
    to_elements_ = to_.elements();
  }

  bool run() {
    images_.clear();
    return extend(0);
  }

 private:
  Fraction signed_mod(const Fraction& x, Int modulus) const { return reduce_mod(x * sign_, modulus); }

  bool annihilated_by(const Vector& h, Int s) const {
    for (std::size_t j = 0; j < h.size(); ++j)
      if (checked_mul(h[j], s) % to_.invariant_factors[j] != 0) return false;
    return true;
  }

  bool extend(std::size_t i) {
    if (i == from_.invariant_factors.size()) return injective();
    const Vector unit_i = unit(i);
    const Fraction target_q = signed_mod(from_.q_values[i], modulus_);
    for (const Vector& h : to_elements_) {
      if (!annihilated_by(h, from_.invariant_factors[i])) continue;
      if (to_.q(h) != target_q) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = to_.b(h, images_[j]) == signed_mod(from_.bilinear[i][j], 1);
      }
      if (!ok) continue;
      images_.push_back(h);
      if (extend(i + 1)) return true;
      images_.pop_back();
    }
    return false;
  }

  Vector unit(std::size_t i) const {
    Vector u(from_.invariant_factors.size(), 0);
    u[i] = 1;
    return u;
  }

  bool injective() const {
    std::set<Vector> seen;
    for (const Vector& a : from_.elements()) {
      Vector img(to_.invariant_factors.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < img.size(); ++j)
          img[j] = (img[j] + a[i] * images_[i][j]) % to_.invariant_factors[j];
      if (!seen.insert(img).second) return false;
    }
    return true;
  }

  const DiscriminantGroup& from_;
  const DiscriminantGroup& to_;
  Int sign_;
  Int modulus_;
  std::vector<Vector> to_elements_;
  std::vector<Vector> images_;
};

}  // namespace

bool discriminant_forms_match(const GramLattice& a, const GramLattice& b, bool sign_flip,
                              Int group_order_bound) {
  const DiscriminantGroup ga = discriminant_group(a);
  const DiscriminantGroup gb = discriminant_group(b);
  if (ga.invariant_factors != gb.invariant_factors) return false;
  if (ga.order() > group_order_bound) {
    throw BudgetExceeded("discriminant group order " + std::to_string(ga.order()) + " exceeds bound " +
                         std::to_string(group_order_bound));
  }
  return FormIsomorphismSearch(ga, gb, sign_flip).run();
}

bool has_nontrivial_overlattice(const GramLattice& lattice, Int group_order_bound) {
  if (!lattice.is_even()) throw InvalidArgument("overlattice test needs an even lattice");
  const DiscriminantGroup g = discriminant_group(lattice);
  if (g.order() > group_order_bound) {
    throw BudgetExceeded("discriminant group order " + std::to_string(g.order()) + " exceeds bound " +
                         std::to_string(group_order_bound));
  }
  for (const Vector& x : g.elements()) {
    if (is_zero(x)) continue;
    if (g.q(x) == Fraction(0)) return true;
  }
  return false;
}

}  // namespace k3le
