#include "qcorr/rational.hpp"

#include <stdexcept>

namespace qcorr {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt p = 1;
  for (int i = 2; i <= n; ++i) p *= i;
  return p;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt p = 1;
  for (int i = 1; i <= k; ++i) {
    p *= (n - k + i);
    p /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return p;
}

std::string rational_to_string(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const BigRat& r) { return static_cast<double>(r); }

std::vector<std::vector<BigRat>> rational_inverse(std::vector<std::vector<BigRat>> a) {
  const size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("rational_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    BigRat p = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      BigRat f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace qcorr
