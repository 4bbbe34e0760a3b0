#include "k3le/lll.hpp"

#include <vector>

namespace k3le {

namespace {

BigInt round_div(const BigInt& num, const BigInt& den) {
  // nearest integer to num/den for den > 0; halves round up
  BigInt twice = 2 * num + den;
  BigInt q = twice / (2 * den);
  if (twice % (2 * den) != 0 && twice < 0) q -= 1;
  return q;
}

// Integral LLL on a Gram matrix, 1-based indices in the style of the
// classical integral formulation (all d_i and lambda_ij stay integers).
class IntegralLll {
 public:
  explicit IntegralLll(const IntMatrix& gram)
      : n_(gram.rows()),
        g_(n_ + 1, std::vector<BigInt>(n_ + 1)),
        h_(n_ + 1, std::vector<BigInt>(n_ + 1)),
        d_(n_ + 1),
        lambda_(n_ + 1, std::vector<BigInt>(n_ + 1)) {
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t j = 1; j <= n_; ++j) g_[i][j] = gram(i - 1, j - 1);
      h_[i][i] = 1;
    }
  }

  LllResult run() {
    if (n_ == 0) return {IntMatrix(), IntMatrix()};
    d_[0] = 1;
    d_[1] = g_[1][1];
    if (d_[1] <= 0) throw InvalidArgument("LLL input is not positive definite");
    std::size_t k = 2;
    std::size_t kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        for (std::size_t j = 1; j <= k; ++j) {
          BigInt u = g_[k][j];
          for (std::size_t i = 1; i < j; ++i) u = (d_[i] * u - lambda_[k][i] * lambda_[j][i]) / d_[i - 1];
          if (j < k) {
            lambda_[k][j] = u;
          } else {
            d_[k] = u;
            if (u <= 0) throw InvalidArgument("LLL input is not positive definite");
          }
        }
      }
      reduce(k, k - 1);
      if (4 * d_[k] * d_[k - 2] < 3 * d_[k - 1] * d_[k - 1] - 4 * lambda_[k][k - 1] * lambda_[k][k - 1]) {
        swap(k, kmax);
        if (k > 2) --k;
      } else {
        for (std::size_t l = k - 2; l >= 1; --l) reduce(k, l);
        ++k;
      }
    }
    LllResult out{IntMatrix(n_, n_), IntMatrix(n_, n_)};
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = 1; j <= n_; ++j) {
        out.gram(i - 1, j - 1) = narrow(g_[i][j]);
        // column j of the transform is basis vector j
        out.transform(i - 1, j - 1) = narrow(h_[j][i]);
      }
    return out;
  }

 private:
  void reduce(std::size_t k, std::size_t l) {
    if (abs(2 * lambda_[k][l]) <= d_[l]) return;
    const BigInt q = round_div(lambda_[k][l], d_[l]);
    // b_k <- b_k - q b_l
    const BigInt gkl = g_[k][l];
    const BigInt new_kk = g_[k][k] - 2 * q * gkl + q * q * g_[l][l];
    for (std::size_t j = 1; j <= n_; ++j) {
      if (j == k) continue;
      g_[k][j] -= q * g_[l][j];
      g_[j][k] = g_[k][j];
    }
    g_[k][k] = new_kk;
    for (std::size_t i = 1; i <= n_; ++i) h_[k][i] -= q * h_[l][i];
    lambda_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(g_[k], g_[k - 1]);
    for (auto& row : g_) std::swap(row[k], row[k - 1]);
    std::swap(h_[k], h_[k - 1]);
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const BigInt lam = lambda_[k][k - 1];
    const BigInt b = (d_[k - 2] * d_[k] + lam * lam) / d_[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const BigInt t = lambda_[i][k];
      lambda_[i][k] = (d_[k] * lambda_[i][k - 1] - lam * t) / d_[k - 1];
      lambda_[i][k - 1] = (b * t + lam * lambda_[i][k]) / d_[k];
    }
    d_[k - 1] = b;
  }

  std::size_t n_;
  std::vector<std::vector<BigInt>> g_;
  std::vector<std::vector<BigInt>> h_;  // h_[j] = coordinates of basis vector j
  std::vector<BigInt> d_;
  std::vector<std::vector<BigInt>> lambda_;
};

}  // namespace

LllResult lll_reduce(const IntMatrix& positive_definite_gram) {
  if (!positive_definite_gram.is_symmetric()) throw InvalidArgument("LLL needs a symmetric Gram matrix");
  return IntegralLll(positive_definite_gram).run();
}

}  // namespace k3le
