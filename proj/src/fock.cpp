#include "qcorr/fock.hpp"

#include <stdexcept>

namespace qcorr {

FockAlgebra::FockAlgebra(int modes) : d_(modes) {
  if (modes < 1 || modes > 12)
    throw std::invalid_argument("mode count out of supported range");
  const int n = dim();
  a_.reserve(d_);
  for (int k = 1; k <= d_; ++k) {
    Mat ak = Mat::Zero(n, n);
    const int bit = 1 << (k - 1);
    for (int idx = 0; idx < n; ++idx) {
      if (!(idx & bit)) continue;
      // Jordan-Wigner string over the lower modes (lower bits).
      int lower = __builtin_popcount(static_cast<unsigned>(idx & (bit - 1)));
      ak(idx ^ bit, idx) = (lower % 2 == 0) ? 1.0 : -1.0;
    }
    a_.push_back(std::move(ak));
  }
  c_.reserve(2 * d_);
  const cplx iu(0.0, 1.0);
  for (int k = 1; k <= d_; ++k) {
    c_.push_back(a_[k - 1] + a_[k - 1].adjoint());
    c_.push_back(iu * (a_[k - 1] - a_[k - 1].adjoint()));
  }
}

const Mat& FockAlgebra::a(int k) const {
  if (k < 1 || k > d_) throw std::out_of_range("mode index out of range");
  return a_[k - 1];
}

const Mat& FockAlgebra::c(int m) const {
  if (m < 1 || m > 2 * d_) throw std::out_of_range("Majorana index out of range");
  return c_[m - 1];
}

Mat FockAlgebra::parity() const {
  const int n = dim();
  Mat q = Mat::Zero(n, n);
  for (int idx = 0; idx < n; ++idx)
    q(idx, idx) = (__builtin_popcount(static_cast<unsigned>(idx)) % 2 == 0) ? 1.0 : -1.0;
  return q;
}

Vec FockAlgebra::vacuum() const {
  Vec v = Vec::Zero(dim());
  v[0] = 1.0;
  return v;
}

Vec FockAlgebra::occupation_state(const std::vector<int>& occupied) const {
  int idx = 0;
  for (int j : occupied) {
    if (j < 1 || j > d_) throw std::out_of_range("mode index out of range");
    int bit = 1 << (j - 1);
    if (idx & bit) throw std::invalid_argument("repeated mode in occupation list");
    idx |= bit;
  }
  Vec v = Vec::Zero(dim());
  v[idx] = 1.0;
  return v;
}

Mat FockAlgebra::majorana_monomial(const std::vector<int>& subset) const {
  if (subset.size() % 2 != 0)
    throw std::invalid_argument("Majorana monomial requires an even subset");
  Mat b = Mat::Identity(dim(), dim());
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("subset must be strictly ascending");
    b = b * c(subset[i]);
  }
  // i^{|S|/2} makes the product Hermitian with B_S^2 = I.
  cplx phase = std::pow(cplx(0.0, 1.0), static_cast<double>(subset.size() / 2));
  return phase * b;
}

RealMat FockAlgebra::correlation_matrix(const Mat& rho) const {
  Mat q = parity();
  if (frob_dist(q * rho * q, rho) > 1e-10 * std::max(1.0, rho.norm()))
    throw std::invalid_argument("correlation_matrix: state is not parity-even");
  const int n2 = 2 * d_;
  RealMat m = RealMat::Zero(n2, n2);
  const cplx iu(0.0, 1.0);
  for (int k = 1; k <= n2; ++k)
    for (int l = k + 1; l <= n2; ++l) {
      cplx val = (iu / 2.0) * (rho * (c(k) * c(l) - c(l) * c(k))).trace();
      m(k - 1, l - 1) = val.real();
      m(l - 1, k - 1) = -val.real();
    }
  return m;
}

Mat FockAlgebra::bogolyubov_unitary(const RealMat& h) const {
  const int n2 = 2 * d_;
  if (h.rows() != n2 || h.cols() != n2)
    throw std::invalid_argument("h must be 2d x 2d");
  if ((h + h.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("h must be antisymmetric");
  Mat hgen = Mat::Zero(dim(), dim());
  for (int k = 1; k <= n2; ++k)
    for (int l = k + 1; l <= n2; ++l) hgen += h(k - 1, l - 1) * c(k) * c(l);
  // hgen is anti-Hermitian; exponentiate through the Hermitian i*hgen.
  auto eig = herm_eig(cplx(0.0, 1.0) * hgen);
  Vec phases(dim());
  for (int i = 0; i < dim(); ++i)
    phases[i] = std::exp(cplx(0.0, -eig.values[i]));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

RealMat FockAlgebra::rotation_of(const Mat& u) const {
  const int n2 = 2 * d_;
  RealMat r(n2, n2);
  const double norm = 1.0 / dim();
  for (int k = 1; k <= n2; ++k)
    for (int l = 1; l <= n2; ++l) {
      cplx val = norm * (c(k) * u * c(l) * u.adjoint()).trace();
      r(k - 1, l - 1) = val.real();
    }
  return r;
}

Vec FockAlgebra::random_pure_gaussian(std::mt19937_64& rng, int parity) const {
  if (parity != 1 && parity != -1)
    throw std::invalid_argument("parity must be +1 or -1");
  const int n2 = 2 * d_;
  std::normal_distribution<double> g(0.0, 1.0);
  RealMat h = RealMat::Zero(n2, n2);
  for (int k = 0; k < n2; ++k)
    for (int l = k + 1; l < n2; ++l) {
      h(k, l) = g(rng);
      h(l, k) = -h(k, l);
    }
  Vec ref = (parity == 1) ? vacuum() : occupation_state({d_});
  return bogolyubov_unitary(h) * ref;
}

void FockAlgebra::build_even_basis() const {
  if (!even_subsets_.empty()) return;
  const int n2 = 2 * d_;
  for (unsigned mask = 0; mask < (1u << n2); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<int> subset;
    for (int m = 1; m <= n2; ++m)
      if (mask & (1u << (m - 1))) subset.push_back(m);
    even_subsets_.push_back(subset);
    even_monomials_.push_back(majorana_monomial(subset));
  }
}

const std::vector<std::vector<int>>& FockAlgebra::even_subsets() const {
  build_even_basis();
  return even_subsets_;
}

Mat FockAlgebra::tilde(const Mat& x) const {
  build_even_basis();
  const int n = dim();
  if (x.rows() != n || x.cols() != n)
    throw std::invalid_argument("operator dimension mismatch");
  Mat out = Mat::Zero(n, n);
  Mat recon = Mat::Zero(n, n);
  for (size_t s = 0; s < even_subsets_.size(); ++s) {
    const Mat& b = even_monomials_[s];
    cplx beta = (x * b).trace() / static_cast<double>(n);
    recon += beta * b;
    double sign = (even_subsets_[s].size() % 4 == 2) ? -1.0 : 1.0;
    out += sign * beta * b;
  }
  if (frob_dist(recon, x) > 1e-8 * std::max(1.0, x.norm()))
    throw std::invalid_argument("tilde: operator is not parity-even");
  return out;
}

Mat a8_state() {
  FockAlgebra f(4);
  const int n = f.dim();
  Mat i16 = Mat::Identity(n, n);
  Mat s1 = -f.c(1) * f.c(2) * f.c(5) * f.c(6);
  Mat s2 = -f.c(2) * f.c(3) * f.c(6) * f.c(7);
  Mat s3 = -f.c(1) * f.c(2) * f.c(3) * f.c(4);
  Mat q = f.parity();
  return (i16 + s1) * (i16 + s2) * (i16 + s3) * (i16 + q) / 16.0;
}

}  // namespace qcorr
