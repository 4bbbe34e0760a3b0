#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "k3le/errors.hpp"

namespace k3le {

using Int = std::int64_t;
__extension__ typedef __int128 Int128;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer coordinates relative to a lattice's distinguished basis.
using Vector = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int narrow(Int128 v);
Int narrow(const BigInt& v);

// Floor of the square root; n must be non-negative.
inline Int isqrt(Int n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative number");
  Int r = static_cast<Int>(__builtin_sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<Int128>(r) * r > n) --r;
  while (static_cast<Int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}
Int128 isqrt(Int128 n);

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}
Int128 floor_div(Int128 a, Int128 b);
Int128 ceil_div(Int128 a, Int128 b);

// gcd of the absolute values of the entries; 0 for an all-zero span.
Int content(std::span<const Int> v);

bool is_zero(std::span<const Int> v);

std::string to_string(std::span<const Int> v);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_columns(std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  Vector operator*(std::span<const Int> v) const;
  IntMatrix operator-() const;

  bool is_symmetric() const;
  std::vector<std::vector<Int>> to_rows() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Exact determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& m);

// Exact inverse; throws DegenerateLattice for singular input.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m);

// Rank over the rationals.
std::size_t rational_rank(const IntMatrix& m);

// Block-diagonal matrix.
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

}  // namespace k3le
