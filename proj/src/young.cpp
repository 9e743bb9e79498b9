#include "qcorr/young.hpp"

#include <stdexcept>

namespace qcorr {

namespace {

void check_partition(const Partition& lambda) {
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw std::invalid_argument("partition rows must be positive");
    if (i > 0 && lambda[i] > lambda[i - 1])
      throw std::invalid_argument("partition rows must be non-increasing");
  }
}

}  // namespace

Partition conjugate(const Partition& lambda) {
  check_partition(lambda);
  if (lambda.empty()) return {};
  Partition mu(lambda[0], 0);
  for (int row : lambda)
    for (int j = 0; j < row; ++j) ++mu[j];
  return mu;
}

BigInt hook_product(const Partition& lambda) {
  check_partition(lambda);
  const Partition mu = conjugate(lambda);
  BigInt g = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = mu[j] - static_cast<int>(i) - 1;
      g *= (arm + leg + 1);
    }
  return g;
}

BigInt dim_irrep(const Partition& lambda, int n) {
  check_partition(lambda);
  if (static_cast<int>(lambda.size()) > n) return 0;
  BigInt f = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      f *= (n + j - static_cast<int>(i));
  return f / hook_product(lambda);
}

BigRat alpha_coeff(const Partition& lambda) {
  check_partition(lambda);
  BigInt c = 1;
  for (int row : lambda) c *= factorial(row);
  BigInt r = 1;
  for (int col : conjugate(lambda)) r *= factorial(col);
  return BigRat(c * r, hook_product(lambda));
}

}  // namespace qcorr
