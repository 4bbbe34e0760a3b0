#pragma once

#include "k3le/integer.hpp"

namespace k3le {

struct LllResult {
  IntMatrix gram;       // transformᵀ · input · transform
  IntMatrix transform;  // unimodular; column j is the j-th reduced vector in input coordinates
};

// Integral LLL (delta = 3/4) on a positive-definite Gram matrix. All
// arithmetic is exact.
LllResult lll_reduce(const IntMatrix& positive_definite_gram);

}  // namespace k3le
