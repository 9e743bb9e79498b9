#include "qcorr/cone.hpp"

#include <numeric>

namespace qcorr {

namespace {

// Slot permutation matrix of prod_{i in X} S_{ii'} on the doubled space.
Mat dist_swap_x(const std::vector<int>& dims2, int L, unsigned mask) {
  std::vector<int> sigma(2 * L);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (int i = 0; i < L; ++i)
    if (mask & (1u << i)) std::swap(sigma[i], sigma[L + i]);
  return permutation_matrix(dims2, sigma);
}

int gauss_basis_size(int d) { return d / 2 + 1; }

}  // namespace

std::vector<Mat> invariant_basis(const ClassSpec& spec) {
  return std::visit(
      [&](const auto& s) -> std::vector<Mat> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          const int L = static_cast<int>(s.dims.size());
          std::vector<int> dims2 = concat_dims(s.dims, s.dims);
          std::vector<Mat> out;
          for (unsigned mask = 0; mask < (1u << L); ++mask)
            out.push_back(dist_swap_x(dims2, L, mask));
          return out;
        } else if constexpr (std::is_same_v<T, BosSpec> ||
                             std::is_same_v<T, FermSpec>) {
          const int L = s.L;
          std::vector<int> single(L, s.d);
          std::vector<int> dims2 = concat_dims(single, single);
          Mat pc2 = kron(carrier_projector(spec), carrier_projector(spec));
          std::vector<Mat> out;
          for (int k = 0; k <= L; ++k) {
            // any X with |X| = k gives the same sandwich; take {1..k}
            unsigned mask = (k == 0) ? 0u : ((1u << k) - 1);
            out.push_back(pc2 * dist_swap_x(dims2, L, mask) * pc2);
          }
          return out;
        } else {
          FockAlgebra f(s.d);
          const int n = f.dim();
          Mat pc2 = kron(carrier_projector(spec), carrier_projector(spec));
          std::vector<Mat> cc;
          for (int i = 1; i <= 2 * s.d; ++i) cc.push_back(kron(f.c(i), f.c(i)));
          std::vector<Mat> out;
          const long long big = static_cast<long long>(n) * n;
          for (int k = 0; k <= s.d / 2; ++k) {
            Mat sum = Mat::Zero(big, big);
            for (unsigned mask = 0; mask < (1u << (2 * s.d)); ++mask) {
              if (__builtin_popcount(mask) != 2 * k) continue;
              Mat term = Mat::Identity(big, big);
              for (int i = 0; i < 2 * s.d; ++i)
                if (mask & (1u << i)) term = term * cc[i];
              sum += term;
            }
            out.push_back(pc2 * sum * pc2);
          }
          return out;
        }
      },
      spec);
}

std::vector<std::vector<BigRat>> cone_inequalities(const ClassSpec& spec) {
  return std::visit(
      [&](const auto& s) -> std::vector<std::vector<BigRat>> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          const int L = static_cast<int>(s.dims.size());
          const unsigned m = 1u << L;
          std::vector<std::vector<BigRat>> rows(m, std::vector<BigRat>(m, 0));
          for (unsigned y = 0; y < m; ++y)
            for (unsigned x = 0; x < m; ++x)
              if ((x & y) == x) rows[y][x] = 1;
          return rows;
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          const int L = s.L;
          std::vector<std::vector<BigRat>> rows(
              L + 1, std::vector<BigRat>(L + 1, 0));
          for (int n = 0; n <= L; ++n)
            for (int k = 0; k <= n; ++k)
              rows[n][k] = BigRat(binomial(n, k), binomial(L, k));
          return rows;
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          if (2 * s.L > s.d)
            throw std::invalid_argument(
                "fermionic cone description requires 2L <= d");
          const int L = s.L;
          std::vector<std::vector<BigRat>> rows(
              L + 1, std::vector<BigRat>(L + 1, 0));
          for (int n = 0; n <= L; ++n)
            for (int k = 0; k <= n; ++k)
              rows[n][k] =
                  BigRat(binomial(n, k), binomial(L, k) * binomial(L, k));
          return rows;
        } else {
          return gauss_cone_matrix(s.d);
        }
      },
      spec);
}

std::vector<std::vector<BigRat>> gauss_cone_matrix(int d) {
  if (d < 1) throw std::invalid_argument("need d >= 1");
  const int m = d / 2 + 1;
  std::vector<std::vector<BigRat>> rows(m, std::vector<BigRat>(m, 0));
  for (int n = 0; n < m; ++n)
    for (int k = 0; k < m; ++k) {
      BigInt sum = 0;
      BigInt pw = 1;  // (-2)^m_
      for (int mm = 0; mm <= std::min(2 * n, k); ++mm) {
        sum += pw * binomial(d - mm, k - mm) * binomial(2 * n, mm);
        pw *= -2;
      }
      if (k % 2) sum = -sum;
      rows[n][k] = BigRat(sum, 1);
    }
  return rows;
}

bool cone_membership(const ConeElement& e) {
  auto rows = cone_inequalities(e.spec);
  if (e.coeffs.size() != rows.front().size())
    throw std::invalid_argument("coefficient count mismatch");
  for (const auto& row : rows) {
    BigRat acc = 0;
    for (size_t j = 0; j < row.size(); ++j) acc += row[j] * e.coeffs[j];
    if (acc > 0) return false;
  }
  return true;
}

std::vector<ConeElement> extreme_rays(const ClassSpec& spec) {
  return std::visit(
      [&](const auto& s) -> std::vector<ConeElement> {
        using T = std::decay_t<decltype(s)>;
        std::vector<ConeElement> out;
        if constexpr (std::is_same_v<T, DistSpec>) {
          const int L = static_cast<int>(s.dims.size());
          const unsigned m = 1u << L;
          for (unsigned y = 0; y < m; ++y) {
            ConeElement e{spec, std::vector<BigRat>(m, 0)};
            const int sy = __builtin_popcount(y);
            for (unsigned x = 0; x < m; ++x) {
              if ((x & y) != y) continue;
              const int sx = __builtin_popcount(x);
              int sgn = ((sy + sx) % 2) ? 1 : -1;  // -(-1)^{|Y|}(-1)^{|X|}
              e.coeffs[x] = sgn;
            }
            out.push_back(std::move(e));
          }
        } else if constexpr (std::is_same_v<T, BosSpec> ||
                             std::is_same_v<T, FermSpec>) {
          const int L = s.L;
          const bool ferm = std::is_same_v<T, FermSpec>;
          if (ferm && 2 * L > s.d)
            throw std::invalid_argument(
                "fermionic extreme rays require 2L <= d");
          for (int m = 0; m <= L; ++m) {
            ConeElement e{spec, std::vector<BigRat>(L + 1, 0)};
            for (int k = m; k <= L; ++k) {
              BigInt w = binomial(L, k) * binomial(k, m);
              if (ferm) w *= binomial(L, k);
              int sgn = ((m + k) % 2) ? 1 : -1;
              e.coeffs[k] = BigRat(sgn * w, 1);
            }
            out.push_back(std::move(e));
          }
        } else {
          // Rays from the exact inverse: a^(n) = -B^{-1} e_n satisfies
          // B a = -e_n, i.e. all inequalities tight except row n.
          auto binv = rational_inverse(cone_inequalities(spec));
          const int m = static_cast<int>(binv.size());
          for (int n = 0; n < m; ++n) {
            ConeElement e{spec, std::vector<BigRat>(m, 0)};
            for (int k = 0; k < m; ++k) e.coeffs[k] = -binv[k][n];
            out.push_back(std::move(e));
          }
        }
        return out;
      },
      spec);
}

Mat cone_operator(const ConeElement& e) {
  auto basis = invariant_basis(e.spec);
  if (basis.size() != e.coeffs.size())
    throw std::invalid_argument("coefficient count mismatch");
  Mat out = Mat::Zero(basis[0].rows(), basis[0].cols());
  for (size_t j = 0; j < basis.size(); ++j)
    out += to_double(e.coeffs[j]) * basis[j];
  return out;
}

double optimal_detect(const Mat& rho, const ClassSpec& spec) {
  const int n = ambient_dim(spec);
  if (rho.rows() != n) throw std::invalid_argument("state dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& ray : extreme_rays(spec)) {
    Mat v = cone_operator(ray);
    Mat full = kron(rho, Mat::Identity(n, n)) * v;
    Mat m = partial_trace(DenseOperator(full, {n, n}), {1}).m;
    Mat herm = (m + m.adjoint()) / 2.0;
    auto eig = herm_eig(herm);
    best = std::max(best, eig.values[0]);
  }
  return best;
}

std::vector<BigRat> subsets_partial_sums(const std::vector<BigRat>& a, int L) {
  const unsigned m = 1u << L;
  if (a.size() != m) throw std::invalid_argument("size mismatch");
  std::vector<BigRat> b(m, 0);
  for (unsigned y = 0; y < m; ++y)
    for (unsigned x = 0; x < m; ++x)
      if ((x & y) == x) b[y] += a[x];
  return b;
}

std::vector<BigRat> subsets_moebius(const std::vector<BigRat>& b, int L) {
  const unsigned m = 1u << L;
  if (b.size() != m) throw std::invalid_argument("size mismatch");
  std::vector<BigRat> a(m, 0);
  for (unsigned x = 0; x < m; ++x)
    for (unsigned y = 0; y < m; ++y) {
      if ((y & x) != y) continue;
      int sgn = ((__builtin_popcount(x) + __builtin_popcount(y)) % 2) ? -1 : 1;
      a[x] += sgn * b[y];
    }
  return a;
}

bool ppt_entangled(const DenseOperator& rho) {
  if (rho.factor_dims.size() != 2)
    throw std::invalid_argument("PPT test requires a bipartite split");
  auto pt = partial_transpose(rho, 1);
  auto eig = herm_eig(pt.m);
  return eig.values[eig.values.size() - 1] < -1e-10;
}

}  // namespace qcorr
