#include "k3le/normal_forms.hpp"

#include <algorithm>

namespace k3le {

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input(i, j);
  std::vector<std::vector<BigInt>> v(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  // col y <- col y - q col x
  auto sub_col = [&](std::size_t y, std::size_t x, const BigInt& q) {
    for (auto& row : a) row[y] -= q * row[x];
    for (auto& row : v) row[y] -= q * row[x];
  };

  SmithForm out;
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest non-zero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        out.right = std::move(v);
        return out;
      }
      std::swap(a[pi], a[t]);
      swap_cols(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        sub_col(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // enforce the divisibility chain
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    if (a[t][t] < 0) {
      for (std::size_t j = t; j < n; ++j) a[t][j] = -a[t][j];
    }
    out.diagonal.push_back(a[t][t]);
  }
  out.right = std::move(v);
  return out;
}

}  // namespace k3le
