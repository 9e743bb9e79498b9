#include "qcorr/symmetrizer.hpp"

#include <algorithm>
#include <numeric>

namespace qcorr {

namespace {

std::vector<long long> strides_of(const std::vector<int>& dims) {
  std::vector<long long> s(dims.size());
  long long acc = 1;
  for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
    s[f] = acc;
    acc *= dims[f];
  }
  return s;
}

void check_sigma(const std::vector<int>& dims, const std::vector<int>& sigma) {
  if (sigma.size() != dims.size())
    throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(dims.size(), false);
  for (size_t j = 0; j < sigma.size(); ++j) {
    int s = sigma[j];
    if (s < 0 || s >= static_cast<int>(dims.size()) || seen[s])
      throw std::invalid_argument("invalid permutation");
    seen[s] = true;
    if (dims[s] != dims[j])
      throw std::invalid_argument("permuted factors have mismatched dimensions");
  }
}

}  // namespace

Vec apply_factor_permutation(const Vec& v, const std::vector<int>& dims,
                             const std::vector<int>& sigma) {
  check_sigma(dims, sigma);
  const auto in_strides = strides_of(dims);
  const int nf = static_cast<int>(dims.size());
  const long long n = v.size();
  // Source index = sum_j digit_j * in_strides[sigma[j]]; walk output indices
  // with a mixed-radix counter and maintain the source index incrementally.
  std::vector<long long> src_stride(nf);
  for (int j = 0; j < nf; ++j) src_stride[j] = in_strides[sigma[j]];
  Vec out(n);
  std::vector<int> digit(nf, 0);
  long long src = 0;
  for (long long i = 0; i < n; ++i) {
    out[i] = v[src];
    // increment
    for (int f = nf - 1; f >= 0; --f) {
      src += src_stride[f];
      if (++digit[f] < dims[f]) break;
      src -= static_cast<long long>(dims[f]) * src_stride[f];
      digit[f] = 0;
    }
  }
  return out;
}

Mat permutation_matrix(const std::vector<int>& dims, const std::vector<int>& sigma) {
  check_sigma(dims, sigma);
  const auto in_strides = strides_of(dims);
  const int nf = static_cast<int>(dims.size());
  const int n = product_of(dims);
  std::vector<long long> src_stride(nf);
  for (int j = 0; j < nf; ++j) src_stride[j] = in_strides[sigma[j]];
  Mat out = Mat::Zero(n, n);
  std::vector<int> digit(nf, 0);
  long long src = 0;
  for (int i = 0; i < n; ++i) {
    out(i, static_cast<int>(src)) = 1.0;
    for (int f = nf - 1; f >= 0; --f) {
      src += src_stride[f];
      if (++digit[f] < dims[f]) break;
      src -= static_cast<long long>(dims[f]) * src_stride[f];
      digit[f] = 0;
    }
  }
  return out;
}

int permutation_sign(std::vector<int> sigma) {
  int sign = 1;
  for (size_t i = 0; i < sigma.size(); ++i) {
    while (sigma[i] != static_cast<int>(i)) {
      std::swap(sigma[i], sigma[sigma[i]]);
      sign = -sign;
    }
  }
  return sign;
}

Mat symmetrizer(const std::vector<int>& dims, const std::vector<int>& slots,
                bool antisymmetric) {
  const int n = product_of(dims);
  for (size_t i = 1; i < slots.size(); ++i)
    if (dims[slots[i]] != dims[slots[0]])
      throw std::invalid_argument("symmetrizer slots must share a dimension");
  std::vector<int> order(slots.begin(), slots.end());
  std::sort(order.begin(), order.end());
  Mat acc = Mat::Zero(n, n);
  long long count = 0;
  std::vector<int> perm_of_slots = order;
  do {
    std::vector<int> sigma(dims.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    for (size_t i = 0; i < order.size(); ++i) sigma[order[i]] = perm_of_slots[i];
    double coeff = 1.0;
    if (antisymmetric) {
      // Sign of the permutation restricted to the slots.
      std::vector<int> rel(order.size());
      for (size_t i = 0; i < order.size(); ++i) {
        rel[i] = static_cast<int>(
            std::lower_bound(order.begin(), order.end(), perm_of_slots[i]) -
            order.begin());
      }
      coeff = permutation_sign(rel);
    }
    acc += coeff * permutation_matrix(dims, sigma);
    ++count;
  } while (std::next_permutation(perm_of_slots.begin(), perm_of_slots.end()));
  return acc / static_cast<double>(count);
}

Mat pair_symmetrizer(const std::vector<int>& dims, int a, int b) {
  return symmetrizer(dims, {a, b}, /*antisymmetric=*/false);
}

Mat block_swap(const std::vector<int>& dims, const std::vector<int>& block_a,
               const std::vector<int>& block_b) {
  if (block_a.size() != block_b.size())
    throw std::invalid_argument("block swap: size mismatch");
  std::vector<int> sigma(dims.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  for (size_t i = 0; i < block_a.size(); ++i) {
    sigma[block_a[i]] = block_b[i];
    sigma[block_b[i]] = block_a[i];
  }
  return permutation_matrix(dims, sigma);
}

Vec symmetrized_product_sum(const std::vector<Vec>& vs) {
  const int k = static_cast<int>(vs.size());
  if (k == 0) throw std::invalid_argument("need at least one vector");
  const long long d = vs[0].size();
  for (const auto& v : vs)
    if (v.size() != d) throw std::invalid_argument("vectors must share dimension");
  // T[S] = sum over orderings of the subset S of the ordered tensor product,
  // with the newest factor in the most significant slot:
  //   T[S] = sum_{i in S} v_i (x) T[S \ {i}].
  std::vector<Vec> table(static_cast<size_t>(1) << k);
  table[0] = Vec::Ones(1);
  for (int S = 1; S < (1 << k); ++S) {
    const int pc = __builtin_popcount(static_cast<unsigned>(S));
    long long sub = 1;
    for (int c = 1; c < pc; ++c) sub *= d;
    Vec acc = Vec::Zero(sub * d);
    for (int i = 0; i < k; ++i) {
      if (!(S & (1 << i))) continue;
      const Vec& rest = table[S ^ (1 << i)];
      for (long long a = 0; a < d; ++a)
        acc.segment(a * sub, sub) += vs[i][a] * rest;
    }
    table[S] = std::move(acc);
  }
  return table[(1 << k) - 1];
}

}  // namespace qcorr
