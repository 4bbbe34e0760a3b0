#pragma once

#include <vector>

#include "k3le/integer.hpp"

namespace k3le {

// U · A · V = diag(d_1, ..., d_r, 0, ...) with d_1 | d_2 | ... and d_i > 0.
// Only the column transform V is recorded.
struct SmithForm {
  std::vector<BigInt> diagonal;
  std::vector<std::vector<BigInt>> right;  // V, cols × cols
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace k3le
