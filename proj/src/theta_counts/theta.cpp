#include <omp.h>

#include <cmath>
#include <exception>
#include <sstream>

#include "k3le/short_vectors.hpp"
#include "k3le/theta.hpp"

namespace k3le::theta {

namespace {

const IntMatrix& positive_gram(const GramLattice& lattice) {
  if (!lattice.is_positive_definite()) throw InvalidArgument("representation numbers need a positive-definite lattice");
  return lattice.gram();
}

void guard(double estimate, double budget, Int n) {
  if (estimate > budget) {
    std::ostringstream os;
    os << "shell 2n = " << 2 * n << " needs about " << estimate << " nodes, over the budget of " << budget;
    throw BudgetExceeded(os.str());
  }
}

}  // namespace

std::uint64_t representation_number_serial(const GramLattice& lattice, Int n, double budget) {
  if (n < 1) throw InvalidArgument("representation_number needs n >= 1");
  const ShortVectorEnumerator e(positive_gram(lattice));
  guard(e.estimated_nodes(2 * n), budget, n);
  return e.count_shell(2 * n);
}

std::uint64_t representation_number(const GramLattice& lattice, Int n, int threads, double budget) {
  if (n < 1) throw InvalidArgument("representation_number needs n >= 1");
  if (threads < 1) throw InvalidArgument("thread count must be positive");
  const ShortVectorEnumerator e(positive_gram(lattice));
  guard(e.estimated_nodes(2 * n), budget, n);
  const auto [lo, hi] = e.outer_range(2 * n);
  std::uint64_t total = 0;
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) reduction(+ : total)
  for (Int v = lo; v <= hi; ++v) {
    try {
      total += e.count_shell(2 * n, ShortVectorEnumerator::kUnlimited, v);
    } catch (...) {
#pragma omp critical(k3le_theta_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

std::uint64_t representation_number(std::string_view label, Int n, int threads, double budget) {
  return representation_number(builtin_gram(label), n, threads, budget);
}

std::string RepNumberTable::to_csv() const {
  std::ostringstream os;
  os << "n,count\n";
  for (Int n = 1; n <= max_n; ++n) os << n << ',' << counts[static_cast<std::size_t>(n)] << '\n';
  return os.str();
}

RepNumberTable representation_table(std::string_view label, Int max_n, int threads, double budget) {
  if (max_n < 1) throw InvalidArgument("representation table needs max_n >= 1");
  if (threads < 1) throw InvalidArgument("thread count must be positive");
  const GramLattice lattice = builtin_gram(label);
  const ShortVectorEnumerator e(positive_gram(lattice));
  const Int bound = 2 * max_n;
  // the bounded walk also visits the innermost level
  const double inner = 2.0 * std::sqrt(static_cast<double>(bound) / static_cast<double>(e.reduced_gram()(0, 0))) + 1.0;
  guard(e.estimated_nodes(bound) * inner, budget, max_n);

  RepNumberTable table{std::string(label), max_n, std::vector<std::uint64_t>(static_cast<std::size_t>(max_n) + 1, 0)};
  const auto [lo, hi] = e.outer_range(bound);
  std::exception_ptr failure;
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint64_t> local(table.counts.size(), 0);
#pragma omp for schedule(dynamic, 1)
    for (Int v = lo; v <= hi; ++v) {
      try {
        e.walk(
            bound, false,
            [&](std::span<const Int>, Int norm) {
              if (norm % 2 == 0) ++local[static_cast<std::size_t>(norm / 2)];
              return true;
            },
            ShortVectorEnumerator::kUnlimited, v);
      } catch (...) {
#pragma omp critical(k3le_theta_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(k3le_theta_merge)
    for (std::size_t i = 0; i < local.size(); ++i) table.counts[i] += local[i];
  }
  if (failure) std::rethrow_exception(failure);
  table.counts[0] = 1;
  return table;
}

InequalityResult inequality_check(Int n, int threads, double budget) {
  static const GramLattice e7 = builtin_gram(std::string_view("E7"));
  static const GramLattice e6 = builtin_gram(std::string_view("E6"));
  static const GramLattice d6 = builtin_gram(std::string_view("D6"));
  InequalityResult r;
  r.n = n;
  r.e7 = representation_number(e7, n, threads, budget);
  r.e6 = representation_number(e6, n, threads, budget);
  r.d6 = representation_number(d6, n, threads, budget);
  r.lhs = 2 * r.e7;
  r.rhs = 28 * r.e6 + 63 * r.d6;
  r.holds = r.lhs > r.rhs;
  return r;
}

}  // namespace k3le::theta
