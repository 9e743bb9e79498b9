// Generalized Uhlmann-Wootters concurrences, the complete four-mode
// convex-Gaussian decision, the generalized Schmidt decomposition, the
// Gaussian fidelity, and a bisection threshold solver.
//
// An antiunitary conjugation theta acts as theta(v) = T conj(v) for a
// symmetric unitary T (so theta^2 = 1); the induced operator conjugation is
// rho~ = T conj(rho) T^dag. The concurrence
//   C(rho) = max{0, lambda_1 - sum_{k >= 2} lambda_k}
// over the non-increasingly ordered square roots of the spectrum of
// rho rho~ is the exact convex roof of |<psi|theta psi>|.
#pragma once

#include <functional>
#include <variant>

#include "qcorr/classes.hpp"
#include "qcorr/fock.hpp"

namespace qcorr {

// theta(v) = t * conj(v); t must be a symmetric unitary.
struct BasisConjugation {
  Mat t;
};

// The Majorana-tilde conjugation of a parity sector of a fermionic Fock
// space; for d = 4 these are the theta_+/- detecting non-Gaussianity.
struct MajoranaTilde {
  int modes = 4;
  Sector sector = Sector::Plus;
};

using ConjugationSpec = std::variant<BasisConjugation, MajoranaTilde>;

// Fock indices of a parity sector, ascending (even/odd occupation count).
std::vector<int> sector_indices(int modes, Sector sector);

// The matrix t with theta(v) = t conj(v) for the given conjugation; for
// MajoranaTilde this is the sector block of the Majorana monomial
// -c_2 c_4 ... c_{2d}, which reproduces FockAlgebra::tilde exactly.
Mat conjugation_matrix(const ConjugationSpec& conj);

Vec conj_apply(const ConjugationSpec& conj, const Vec& v);

// rho~ = theta rho theta = t conj(rho) t^dag.
Mat conj_rho_tilde(const ConjugationSpec& conj, const Mat& rho);

// Uhlmann-Wootters concurrence of rho (PSD; may be unnormalized, the value
// scales linearly with the trace). Throws if the spectrum of rho rho~ has
// imaginary parts above 1e-6.
double uw_concurrence(const Mat& rho, const ConjugationSpec& conj);

// Two-qubit Wootters concurrence (sigma_y (x) sigma_y conjugation).
double wootters_2q(const Mat& rho);

struct GaussConcurrences {
  double c_plus = 0;
  double c_minus = 0;
};

// C_+/- of an even 16-dim state: the unnormalized sector blocks
// rho_+/- = P_+/- rho P_+/- conjugated by the Majorana tilde.
GaussConcurrences gauss_concurrences(const Mat& rho16);

struct ConvexGaussReport {
  double c_plus = 0;
  double c_minus = 0;
  bool convex_gaussian = false;
  std::string note;
};

// Complete d = 4 decision: convex-Gaussian iff C_+ and C_- vanish (within
// 1e-10); a positive verdict implies a decomposition into at most 16 pure
// Gaussian states exists (not constructed here).
ConvexGaussReport convex_gaussian(const Mat& rho16);

struct GeneralizedSchmidt {
  double p = 0;       // in [0, 1/sqrt(2)]
  Vec psi_g;          // 8-dim even-sector Gaussian vector
};

// psi = sqrt(1 - p^2) psi_G + p theta_+ psi_G for a normalized even-sector
// (8-dim) vector psi, up to a global phase; p = 0 iff psi is Gaussian.
GeneralizedSchmidt generalized_schmidt(const Vec& psi8);

struct GaussFidelity {
  double f = 1;          // max fidelity to a pure Gaussian state
  double trace_lo = 0;   // Fuchs-van de Graaf bounds on the trace distance
  double trace_hi = 0;
};

// F_Gauss = 1/2 + (1/2) sqrt(1 - C_+^2) for a state supported on the even
// sector of the d = 4 Fock space.
GaussFidelity gauss_fidelity(const Mat& rho16);

// Bisection root of a continuous detector along a one-parameter family;
// requires a sign change on [lo, hi], resolves p to 1e-10.
double threshold_solver(const std::function<Mat(double)>& family,
                        const std::function<double(const Mat&)>& detector,
                        double lo, double hi);

// (1 - p) a8 + p I/16 on the 16-dim Fock space.
Mat depolarized_a8(double p);

// Two-fermion state sum_i lambda_i phi_{2i-1} ^ phi_{2i} on (C^d)^{(x)2}
// in the ambient convention of FermSpec{d, 2}; lambda is normalized first.
Vec two_fermion_state(int d, std::vector<double> lambda);

// Critical depolarization p_cr = (1 - sum lambda_i^4) /
// ((1 - sum lambda_i^4) + 2(d-2)/(d(d-1))) for the two-fermion family
// (the coefficient follows from the exact witness identities; see the
// implementation note).
double ferm_depol_pcr(int d, std::vector<double> lambda);

}  // namespace qcorr
