#include <cctype>

#include "k3le/theta.hpp"

namespace k3le::theta {

Rational parse_decimal(std::string_view text) {
  BigInt num = 0, den = 1;
  bool dot = false, digits = false;
  std::size_t i = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) ++i;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '.' && !dot) {
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      num = num * 10 + (ch - '0');
      if (dot) den *= 10;
      digits = true;
    } else {
      throw InvalidArgument("not a decimal number: " + std::string(text));
    }
  }
  if (!digits) throw InvalidArgument("not a decimal number: " + std::string(text));
  return Rational(negative ? BigInt(-num) : num, den);
}

bool threshold_predicate(Int n) {
  if (n < 1) throw InvalidArgument("threshold predicate needs n >= 1");
  const ThresholdResult c;
  const Rational a = 2 * parse_decimal(c.e7_constant);
  const Rational b = 28 * parse_decimal(c.e6_constant) + 63 * parse_decimal(c.d6_constant);
  // a n^{5/2} > b n^2  <=>  a^2 n > b^2
  return a * a * n > b * b;
}

ThresholdResult analytic_threshold() {
  ThresholdResult r;
  const Rational a = 2 * parse_decimal(r.e7_constant);
  const Rational b = 28 * parse_decimal(r.e6_constant) + 63 * parse_decimal(r.d6_constant);
  const Rational q = (b * b) / (a * a);
  // least integer strictly above q
  const BigInt fl = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
  r.n = narrow(BigInt(fl + 1));
  if (!threshold_predicate(r.n) || (r.n > 1 && threshold_predicate(r.n - 1))) {
    throw DataIntegrityError("threshold is not the least solution");
  }
  return r;
}

bool mass_identity_holds(const MassIdentity& m) {
  if (m.d10_term <= 0 || m.e8_term <= 0 || m.total <= 0) throw InvalidArgument("mass denominators must be positive");
  return Rational(1, m.d10_term) + Rational(1, m.e8_term) == Rational(1, m.total);
}

Rational mass_of_genus_formula() { return Rational(5, BigInt(256) * 24 * 1814400); }

bool mass_identity_check() {
  const MassIdentity m;
  return mass_identity_holds(m) && mass_of_genus_formula() == Rational(1, m.total);
}

Int a1_pair_count_in_E7() {
  const auto roots = enumerate_roots(builtin_gram(std::string_view("E7")));
  return static_cast<Int>(roots.size() / 2);
}

}  // namespace k3le::theta
