#include "qcorr/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qcorr {

namespace {

// Cached Majorana monomial -c_2 c_4 ... c_{2d} implementing the tilde
// conjugation on vectors: it commutes with parity, is Hermitian, squares to
// the identity, and flips c_{2k} while fixing c_{2k-1} under conjugation.
const Mat& tilde_monomial(int modes) {
  static std::map<int, Mat> cache;
  auto it = cache.find(modes);
  if (it == cache.end()) {
    FockAlgebra f(modes);
    std::vector<int> evens;
    for (int k = 1; k <= modes; ++k) evens.push_back(2 * k);
    it = cache.emplace(modes, f.majorana_monomial(evens)).first;
  }
  return it->second;
}

}  // namespace

std::vector<int> sector_indices(int modes, Sector sector) {
  std::vector<int> idx;
  const int want = (sector == Sector::Plus) ? 0 : 1;
  for (int i = 0; i < (1 << modes); ++i)
    if (__builtin_popcount(static_cast<unsigned>(i)) % 2 == want)
      idx.push_back(i);
  return idx;
}

Mat conjugation_matrix(const ConjugationSpec& conj) {
  return std::visit(
      [](const auto& c) -> Mat {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, BasisConjugation>) {
          if (frob_dist(c.t, c.t.transpose()) > 1e-10)
            throw std::invalid_argument("conjugation matrix must be symmetric");
          return c.t;
        } else {
          const Mat& full = tilde_monomial(c.modes);
          auto idx = sector_indices(c.modes, c.sector);
          const int n = static_cast<int>(idx.size());
          Mat block(n, n);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) block(i, j) = full(idx[i], idx[j]);
          return block;
        }
      },
      conj);
}

Vec conj_apply(const ConjugationSpec& conj, const Vec& v) {
  return conjugation_matrix(conj) * v.conjugate();
}

Mat conj_rho_tilde(const ConjugationSpec& conj, const Mat& rho) {
  Mat t = conjugation_matrix(conj);
  if (rho.rows() != t.rows())
    throw std::invalid_argument("state dimension does not match conjugation");
  return t * rho.conjugate() * t.adjoint();
}

double uw_concurrence(const Mat& rho, const ConjugationSpec& conj) {
  Mat prod = rho * conj_rho_tilde(conj, rho);
  Eigen::ComplexEigenSolver<Mat> solver(prod, /*computeEigenvectors=*/false);
  std::vector<double> lambdas;
  for (int i = 0; i < prod.rows(); ++i) {
    cplx ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-6)
      throw std::runtime_error(
          "uw_concurrence: eigenvalue of rho rho~ has a large imaginary part");
    double re = ev.real();
    if (re < 0) {
      if (re < -1e-6)
        throw std::runtime_error(
            "uw_concurrence: eigenvalue of rho rho~ is significantly negative");
      re = 0;
    }
    lambdas.push_back(std::sqrt(re));
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
  double val = lambdas[0];
  for (size_t i = 1; i < lambdas.size(); ++i) val -= lambdas[i];
  return std::max(0.0, val);
}

double wootters_2q(const Mat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("wootters_2q expects a 4x4 density matrix");
  Mat sy(2, 2);
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  return uw_concurrence(rho, BasisConjugation{kron(sy, sy)});
}

GaussConcurrences gauss_concurrences(const Mat& rho16) {
  if (rho16.rows() != 16 || rho16.cols() != 16)
    throw std::invalid_argument("expected a 16-dim (d = 4) Fock-space state");
  auto even = sector_indices(4, Sector::Plus);
  auto odd = sector_indices(4, Sector::Minus);
  // Evenness: the parity-off-diagonal blocks must vanish.
  double off = 0;
  for (int i : even)
    for (int j : odd)
      off = std::max({off, std::abs(rho16(i, j)), std::abs(rho16(j, i))});
  if (off > 1e-10)
    throw std::invalid_argument("state is not even (parity-off-diagonal)");
  GaussConcurrences out;
  for (Sector s : {Sector::Plus, Sector::Minus}) {
    auto idx = sector_indices(4, s);
    Mat block(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) block(i, j) = rho16(idx[i], idx[j]);
    const double c = uw_concurrence(block, MajoranaTilde{4, s});
    (s == Sector::Plus ? out.c_plus : out.c_minus) = c;
  }
  return out;
}

ConvexGaussReport convex_gaussian(const Mat& rho16) {
  auto c = gauss_concurrences(rho16);
  ConvexGaussReport rep;
  rep.c_plus = c.c_plus;
  rep.c_minus = c.c_minus;
  rep.convex_gaussian = c.c_plus <= 1e-10 && c.c_minus <= 1e-10;
  rep.note = rep.convex_gaussian
                 ? "convex-Gaussian; a decomposition into at most 16 pure "
                   "Gaussian states exists (not constructed)"
                 : "not convex-Gaussian";
  return rep;
}

GeneralizedSchmidt generalized_schmidt(const Vec& psi8) {
  if (psi8.size() != 8)
    throw std::invalid_argument("expected an 8-dim even-sector vector");
  if (std::abs(psi8.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("state vector must be normalized");
  ConjugationSpec theta = MajoranaTilde{4, Sector::Plus};
  Mat t = conjugation_matrix(theta);
  // Rotate the global phase so that z = <psi|theta psi> is real and >= 0;
  // then psi' = u + i w with theta-real u, w, <u|w> = 0 and |u| >= |w|.
  const cplx z = (psi8.adjoint() * (t * psi8.conjugate()))(0);
  const double alpha = (std::abs(z) > 1e-14) ? std::arg(z) / 2.0 : 0.0;
  Vec psi = std::exp(cplx(0, alpha)) * psi8;
  Vec theta_psi = t * psi.conjugate();
  Vec u = (psi + theta_psi) / 2.0;
  Vec w = (psi - theta_psi) / (2.0 * cplx(0, 1));
  const double su = u.norm(), a = w.norm();
  Vec psi1 = u / su;
  Vec psi2;
  if (a > 1e-9) {
    psi2 = w / a;
  } else {
    // theta-real complement of psi1: any real combination works, the p =
    // 1/sqrt(2) orbit is transitive over the choice.
    for (int j = 0; j < 8; ++j) {
      Vec cand = Vec::Unit(8, j) + t * Vec::Unit(8, j).conjugate();
      cand -= psi1 * (psi1.adjoint() * cand)(0);
      if (cand.norm() > 0.5) {
        psi2 = cand / cand.norm();
        break;
      }
    }
  }
  GeneralizedSchmidt out;
  // p = (|u| - |w|)/sqrt(2); equivalently C_+ = |z| = 2 p sqrt(1 - p^2).
  out.p = std::clamp((su - a) / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0));
  out.psi_g = (psi1 + cplx(0, 1) * psi2) / std::sqrt(2.0);
  return out;
}

GaussFidelity gauss_fidelity(const Mat& rho16) {
  auto c = gauss_concurrences(rho16);
  auto odd = sector_indices(4, Sector::Minus);
  double odd_weight = 0;
  for (int i : odd) odd_weight += std::abs(rho16(i, i));
  if (odd_weight > 1e-10)
    throw std::invalid_argument("state must be supported on the even sector");
  GaussFidelity out;
  // Snap to the C_+ = 1 endpoint: dF/dC diverges there, so an O(1e-16)
  // concurrence error would otherwise inflate to O(1e-8) in the fidelity.
  const double cp = std::min(c.c_plus, 1.0);
  out.f = (cp >= 1.0 - 1e-12) ? 0.5 : 0.5 + 0.5 * std::sqrt(1.0 - cp * cp);
  out.trace_lo = 1.0 - std::sqrt(out.f);
  out.trace_hi = std::sqrt(1.0 - out.f);
  return out;
}

double threshold_solver(const std::function<Mat(double)>& family,
                        const std::function<double(const Mat&)>& detector,
                        double lo, double hi) {
  double flo = detector(family(lo));
  double fhi = detector(family(hi));
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw std::invalid_argument("threshold_solver: no sign change in bracket");
  while (hi - lo > 1e-10) {
    const double mid = (lo + hi) / 2.0;
    const double fmid = detector(family(mid));
    if (fmid == 0) return mid;
    if ((fmid > 0) == (flo > 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0;
}

Mat depolarized_a8(double p) {
  return (1.0 - p) * a8_state() + p * Mat::Identity(16, 16) / 16.0;
}

Vec two_fermion_state(int d, std::vector<double> lambda) {
  if (static_cast<int>(lambda.size()) > d / 2)
    throw std::invalid_argument("too many Schmidt coefficients");
  double norm2 = 0;
  for (double l : lambda) norm2 += l * l;
  if (norm2 <= 0) throw std::invalid_argument("zero coefficient vector");
  Vec out = Vec::Zero(static_cast<long long>(d) * d);
  for (size_t i = 0; i < lambda.size(); ++i) {
    const int p1 = 2 * static_cast<int>(i), p2 = p1 + 1;
    const double amp = lambda[i] / std::sqrt(2.0 * norm2);
    out[p1 * d + p2] += amp;
    out[p2 * d + p1] -= amp;
  }
  return out;
}

double ferm_depol_pcr(int d, std::vector<double> lambda) {
  double norm2 = 0;
  for (double l : lambda) norm2 += l * l;
  double sum4 = 0;
  for (double l : lambda) sum4 += (l * l / norm2) * (l * l / norm2);
  const double purity_gap = 1.0 - sum4;
  // f(d) = 2(d-2)/(d(d-1)): the value implied by the two exact witness
  // identities <psi psi|A|psi psi> = (1 - sum lambda^4)/3 and
  // tr((I (x) psi psi) A) = (d-2)(d-3)/12, and confirmed by root-finding
  // the witness value along the depolarization family.
  const double f = 2.0 * (d - 2) / (static_cast<double>(d) * (d - 1));
  return purity_gap / (purity_gap + f);
}

}  // namespace qcorr
