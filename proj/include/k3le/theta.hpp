#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "k3le/root_system.hpp"

namespace k3le::theta {

// Guard on the enumerator's estimate of visited nodes for one shell.
inline constexpr double kDefaultBudget = 2e8;

// Number of vectors of norm 2n. Throws BudgetExceeded when the estimated
// work exceeds `budget`.
std::uint64_t representation_number_serial(const GramLattice& lattice, Int n, double budget = kDefaultBudget);
// Same count with the outermost coordinate range split across threads.
std::uint64_t representation_number(const GramLattice& lattice, Int n, int threads = 1,
                                    double budget = kDefaultBudget);
// Named positive-definite lattice, e.g. "E7", "D6", "A3".
std::uint64_t representation_number(std::string_view label, Int n, int threads = 1, double budget = kDefaultBudget);

struct RepNumberTable {
  std::string label;
  Int max_n = 0;
  std::vector<std::uint64_t> counts;  // counts[n] = N(2n); counts[0] = 1

  std::string to_csv() const;  // header "n,count", rows n = 1..max_n
};

// One bounded walk of norm <= 2 max_n, bucketed by norm.
RepNumberTable representation_table(std::string_view label, Int max_n, int threads = 1,
                                    double budget = kDefaultBudget);

struct InequalityResult {
  Int n = 0;
  std::uint64_t e7 = 0;
  std::uint64_t e6 = 0;
  std::uint64_t d6 = 0;
  std::uint64_t lhs = 0;  // 2 N_E7
  std::uint64_t rhs = 0;  // 28 N_E6 + 63 N_D6
  bool holds = false;
};

// 2 N_E7(2n) > 28 N_E6(2n) + 63 N_D6(2n).
InequalityResult inequality_check(Int n, int threads = 1, double budget = kDefaultBudget);

struct ThresholdResult {
  Int n = 0;
  std::string e7_constant = "123.8";
  std::string e6_constant = "103.69";
  std::string d6_constant = "75.13";
};

// Exact value of a terminating decimal such as "103.69".
Rational parse_decimal(std::string_view text);

// 2 c7 n^{5/2} > (28 c6 + 63 cd) n^2, evaluated exactly.
bool threshold_predicate(Int n);
ThresholdResult analytic_threshold();

struct MassIdentity {
  BigInt d10_term = 3715891200;
  BigInt e8_term = 5573836800;
  BigInt total = 2229534720;
};

// 1/a + 1/b == 1/c for the given denominators.
bool mass_identity_holds(const MassIdentity& m);
// The displayed identity together with m(f) = 5/(2^8 4! 1814400).
bool mass_identity_check();
Rational mass_of_genus_formula();

// Pairs {±r} of roots of E7.
Int a1_pair_count_in_E7();

}  // namespace k3le::theta
