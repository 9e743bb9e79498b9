// Typicality of correlations on isospectral manifolds: Haar-average
// formulas, critical maximal eigenvalues, concentration-of-measure lower
// bounds for the fraction of correlated states, per-class parameter tables,
// asymptotic rows and a deterministic sharded Monte Carlo estimator.
//
// The detection function along the unitary orbit of rho0 = diag(spectrum) is
//   f(U) = tr((U rho0 U^dag (x) U psi0 psi0 U^dag) V),
// with psi0 a fixed top eigenvector of rho0 and V the (carrier-compressed)
// bilinear witness; f(U) > 0 certifies a correlated state on the orbit.
#pragma once

#include <cstdint>
#include <string>

#include "qcorr/witness.hpp"

namespace qcorr {

// Non-increasing probability vector (the ordered spectrum of rho).
struct SpectrumProfile {
  std::vector<double> p;
};

// Validates ordering, positivity and normalization (sum = 1 within 1e-12).
SpectrumProfile make_spectrum(std::vector<double> p);

// Parses "0.9,0.02x5" (comma-separated entries, "vxk" repeats v k times);
// when expected_n >= 0 the length must match it.
SpectrumProfile parse_spectrum(const std::string& text, int expected_n = -1);

// Exact parameters of the bilinear typicality estimate for one class.
struct ClassParams {
  BigInt n;      // carrier dimension N
  BigRat x;      // X = tr(A) / dim Sym^2(carrier); the alpha parameter
  BigRat c;      // witness constant; beta = -c
  BigRat alpha;  // = x
  BigRat beta;   // = -c
};

// Throws for saturated classes (X = 0 or c = 0), whose estimate is vacuous.
ClassParams class_params(const ClassSpec& spec);

// The closed-form table value of X; cross-checks class_x_parameter. The
// distinguishable row requires equal local dimensions.
BigRat table_x_parameter(const ClassSpec& spec);

// p_max,cr = -(alpha + beta)/(alpha - beta) = (c - X)/(c + X). Requires the
// theorem's hypotheses alpha > 0, beta < 0, alpha + beta <= 0 (the boundary
// alpha = -beta gives exactly 0).
BigRat pmax_critical(const ClassParams& params);

// k-linear critical value (k - 1 - X~)/(k - 1 + X) with X~ = X/(k-1).
BigRat pmax_critical_klinear(const BigRat& x, int k);

// Table value X = C(d, n+1)^2 / C(d^2 + n, n+1) for the Schmidt-rank-n
// class on C^d (x) C^d (k = n + 1 copies).
BigRat schmidt_x(int d, int n);

// E_mu f = (alpha + beta)/2 + ((alpha - beta)/2) tr(rho1 rho2) for
// f(U) = tr((U rho1 U^dag (x) U rho2 U^dag) V).
double haar_average_bilinear(const BilinearWitness& w, const Mat& rho1,
                             const Mat& rho2);

// E_mu f = -(k-1) + ((k-1) + X) tr((rho (x) (psi psi)^(x)(k-1)) P^sym,k)
// with X = tr(A)/dim Sym^k; the overlap factor is exactly
// (1 + (k-1) <psi|rho|psi>)/k, which for a top eigenvector psi becomes
// ((k-1) p_max + 1)/k.
double haar_average_klinear(const BigRat& x, int k, const Mat& rho,
                            const Vec& psi);

// 1 - exp(-N delta^2 (alpha - beta)^2 / 256) with delta = p_1 - p_max,cr;
// returns 0 when delta <= 0 (the bound is vacuous).
double lower_bound_bilinear(const SpectrumProfile& spectrum,
                            const ClassParams& params);

// k-linear bound 1 - exp(-N delta^2 C_k (1 + X)^2 / 16), C_k = ((k-1)/k)^4,
// with delta measured from the k-linear critical value.
double lower_bound_klinear(const SpectrumProfile& spectrum, const BigInt& n,
                           int k, const BigRat& x);

// The bilinear witness compressed to carrier (x) carrier coordinates
// (n^2 x n^2 for n = carrier_dim), as used by the Monte Carlo estimator.
Mat compressed_witness(const ClassSpec& spec);

// One sample of the detection function: f(U) for rho0 = diag(spectrum) and
// psi0 = e_0 (the deterministic top-eigenvector choice).
double mc_function_value(const Mat& v_compressed, const RealVec& spectrum,
                         const Mat& u);

struct EstimatorReport {
  long long samples = 0;
  double fraction = 0;        // share of samples with f(U) > 1e-10
  double stderr_half = 0;     // Wilson 95% half-width
  double mean_f = 0;          // empirical mean of f(U)
  double analytic_bound = 0;  // lower_bound_bilinear at this spectrum
  double p_max_cr = 0;
  std::uint64_t seed = 0;
  int shards = 1;
};

// Deterministic: sample i draws from its own stream make_rng(seed, i), so
// the hit count (and hence fraction and half-width) is a pure function of
// (seed, samples) regardless of the shard count; shards partition the index
// range and run concurrently, capped by QCORR_THREADS.
EstimatorReport mc_fraction(const SpectrumProfile& spectrum,
                            const ClassSpec& spec, long long samples,
                            std::uint64_t seed, int shards);

enum class AsymptoticRegime {
  FixedModes,     // d fixed, L -> infinity
  Proportional,   // L/d = a fixed, d -> infinity
};

struct AsymptoticsRow {
  std::string regime;
  double n_exact = 0;
  double npcr_exact = 0;   // N * p_max,cr at the given finite parameters
  double n_asympt = 0;     // table expression evaluated at the parameters
  double npcr_asympt = 0;
};

// The asymptotic table row for the class, evaluated at its parameters,
// together with the exact finite values for comparison. Throws when the
// class is absent from the requested table.
AsymptoticsRow asymptotics(const ClassSpec& spec, AsymptoticRegime regime);

}  // namespace qcorr
