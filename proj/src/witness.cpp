#include "qcorr/witness.hpp"

#include <numeric>

namespace qcorr {

namespace {

BigInt pow_int(BigInt base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

BigRat gauss_a_constant(int d) {
  if (d < 1 || d > 1000)
    throw std::invalid_argument("Gaussian constant asserted for d <= 1000 only");
  const int h = d / 2;
  BigRat sum = 0;
  for (int k = 0; k <= d; ++k) {
    for (int m = 0; m <= std::min(k, 2 * h); ++m) {
      BigRat term(binomial(d, k), binomial(2 * d, 2 * k));
      term *= BigRat(binomial(d - m, k - m) * binomial(h, m), 1);
      BigInt sign_pow = pow_int(-2, m);
      sum += BigRat(sign_pow, 1) * term;
    }
  }
  return BigRat(binomial(2 * d, d), pow_int(2, 2 * d)) * sum;
}

BigRat bilinear_constant(const ClassSpec& spec) {
  return std::visit(
      [](const auto& s) -> BigRat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          const int l = static_cast<int>(s.dims.size());
          return BigRat(pow_int(2, l - 1) - 1, pow_int(2, l - 1));
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          return BigRat(pow_int(2, s.L - 1) - 1, pow_int(2, s.L - 1));
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          const int denom = s.L + 1 - std::max(0, 2 * s.L - s.d);
          if (denom <= 0)
            throw std::invalid_argument("fermionic constant undefined here");
          return BigRat(denom - 2, denom);
        } else {
          return 1 - gauss_a_constant(s.d);
        }
      },
      spec);
}

BigRat class_x_parameter(const ClassSpec& spec) {
  const BigInt n = carrier_dim(spec);
  const BigRat dim_sym(n * (n + 1), 2);
  const BigRat tr_p = class_projector_k_trace(spec, 2);
  return (dim_sym - tr_p) / dim_sym;
}

BilinearWitness bilinear_witness(const ClassSpec& spec) {
  BilinearWitness w;
  w.spec = spec;
  w.c = bilinear_constant(spec);
  w.alpha = class_x_parameter(spec);
  w.beta = -w.c;
  Mat s = sym2(spec);
  Mat proj = class_projector2(spec);
  w.a = s - proj;
  // P^asym of the carrier: Pc2 (I - S)/2 Pc2 = Pc2 - P^sym(carrier).
  Mat pc = carrier_projector(spec);
  w.pasym = kron(pc, pc) - s;
  w.v = w.a - to_double(w.c) * w.pasym;
  return w;
}

double detect2(const BilinearWitness& w, const Mat& rho1, const Mat& rho2) {
  if (rho1.rows() != rho2.rows() || rho1.rows() * rho2.rows() != w.v.rows())
    throw std::invalid_argument("state dimensions do not match the witness");
  return (kron(rho1, rho2) * w.v).trace().real();
}

Vec symmetrize_copies(const std::vector<int>& single_dims, int k, const Vec& v) {
  const int m = static_cast<int>(single_dims.size());
  std::vector<int> dims;
  for (int j = 0; j < k; ++j)
    dims.insert(dims.end(), single_dims.begin(), single_dims.end());
  if (v.size() != product_of(dims))
    throw std::invalid_argument("vector dimension mismatch");
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  Vec acc = Vec::Zero(v.size());
  long long count = 0;
  do {
    std::vector<int> sigma(k * m);
    for (int j = 0; j < k; ++j)
      for (int s = 0; s < m; ++s) sigma[j * m + s] = p[j] * m + s;
    acc += apply_factor_permutation(v, dims, sigma);
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc / static_cast<double>(count);
}

double sym_overlap(const std::vector<int>& single_dims,
                   const std::vector<Vec>& vs) {
  Vec w = vs[0];
  for (size_t i = 1; i < vs.size(); ++i) w = kron(w, vs[i]);
  Vec sw = symmetrize_copies(single_dims, static_cast<int>(vs.size()), w);
  return (w.adjoint() * sw).real()(0);
}

MultilinearWitness multilinear_witness(const ClassSpec& spec, int k) {
  MultilinearWitness w;
  w.k = k;
  w.single_dims = ambient_factor_dims(spec);
  if (k == 2) {
    // Dense path: exactly the bilinear class operator (with c replaced by
    // the generic k-linear constant k-1 = 1, i.e. V = A - P^asym).
    Mat a = class_operator2(spec);
    w.apply_a = [a](const Vec& v) -> Vec { return a * v; };
  } else {
    // A = Pc^{(x)k} P^{sym,k} Pc^{(x)k} - P^{kl0}, matrix-free. The k-copy
    // class projector already contains the per-copy carrier projection
    // (per-copy antisymmetrizers / the full symmetrizer), so only the copy
    // symmetrizer needs the carrier sandwich; Pc^{(x)k} commutes with copy
    // permutations, so a single per-copy application on each side suffices.
    Mat pc = carrier_projector(spec);
    ClassSpec sp = spec;
    auto dims = w.single_dims;
    const bool trivial_carrier = std::holds_alternative<DistSpec>(spec);
    w.apply_a = [sp, k, dims, pc, trivial_carrier](const Vec& v) -> Vec {
      auto carrier_per_copy = [&](Vec x) -> Vec {
        if (trivial_carrier) return x;
        const int n = static_cast<int>(pc.rows());
        const std::vector<int> copy_dims(k, n);
        for (int j = 0; j < k; ++j) {
          // Bring copy j to the last (fastest-varying) slot, apply pc there
          // via a column-major reshape, and restore the order.
          std::vector<int> swap_jk(k);
          std::iota(swap_jk.begin(), swap_jk.end(), 0);
          std::swap(swap_jk[j], swap_jk[k - 1]);
          x = apply_factor_permutation(x, copy_dims, swap_jk);
          Eigen::Map<Mat> m(x.data(), n, x.size() / n);
          m = (pc * m).eval();
          x = apply_factor_permutation(x, copy_dims, swap_jk);
        }
        return x;
      };
      Vec sym = carrier_per_copy(symmetrize_copies(dims, k, carrier_per_copy(v)));
      return sym - apply_class_projector_k(sp, k, v);
    };
  }
  return w;
}

double detect_k(const MultilinearWitness& w, const std::vector<Mat>& rhos,
                double rank_tol) {
  if (static_cast<int>(rhos.size()) != w.k)
    throw std::invalid_argument("need exactly k states");
  const int n = product_of(w.single_dims);
  // Eigendecompose every input once.
  std::vector<std::vector<std::pair<double, Vec>>> parts(w.k);
  for (int i = 0; i < w.k; ++i) {
    if (rhos[i].rows() != n)
      throw std::invalid_argument("state dimension mismatch");
    auto eig = herm_eig(rhos[i]);
    for (int j = 0; j < n; ++j)
      if (eig.values[j] > rank_tol)
        parts[i].push_back({eig.values[j], eig.vectors.col(j)});
  }
  double a_term = 0.0, sym_term = 0.0;
  std::vector<size_t> idx(w.k, 0);
  bool more = true;
  while (more) {
    double weight = 1.0;
    std::vector<Vec> vs(w.k);
    for (int i = 0; i < w.k; ++i) {
      weight *= parts[i][idx[i]].first;
      vs[i] = parts[i][idx[i]].second;
    }
    Vec prod = vs[0];
    for (int i = 1; i < w.k; ++i) prod = kron(prod, vs[i]);
    a_term += weight * (prod.adjoint() * w.apply_a(prod)).real()(0);
    Vec sp = symmetrize_copies(w.single_dims, w.k, prod);
    sym_term += weight * (prod.adjoint() * sp).real()(0);
    more = false;
    for (int i = 0; i < w.k; ++i) {
      if (++idx[i] < parts[i].size()) {
        more = true;
        break;
      }
      idx[i] = 0;
    }
  }
  return a_term - (w.k - 1) * (1.0 - sym_term);
}

}  // namespace qcorr
