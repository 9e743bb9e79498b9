// Non-correlated pure-state classes and the operators that characterize
// them: two-copy projectors P^{2l0}, the class operators A = P^sym - P^{2l0},
// their k-copy generalizations, Schmidt-rank operators and random class
// members.
//
// Copy layout convention (fixed): k copies of an L-site system are stored
// copy-major, i.e. the tensor slot of site i in copy j is j*L + i, so that
// |psi^(x)k> = kron(psi, ..., psi).
#pragma once

#include <random>
#include <string>
#include <variant>

#include "qcorr/dense.hpp"
#include "qcorr/fock.hpp"
#include "qcorr/rational.hpp"
#include "qcorr/symmetrizer.hpp"
#include "qcorr/young.hpp"

namespace qcorr {

enum class Sector { Plus, Minus };

// Product states of L distinguishable subsystems with local dims d_1..d_L.
struct DistSpec {
  std::vector<int> dims;
};

// Bosonic product states v^(x)L in Sym^L(C^d).
struct BosSpec {
  int d;
  int L;
};

// Slater determinants of L fermions in C^d (requires L <= d).
struct FermSpec {
  int d;
  int L;
};

// Pure fermionic Gaussian states of fixed parity on d modes.
struct GaussSpec {
  int d;
  Sector sector = Sector::Plus;
};

using ClassSpec = std::variant<DistSpec, BosSpec, FermSpec, GaussSpec>;

std::string class_name(const ClassSpec& spec);

// Single-copy ambient space (the space states are stored in; the carrier may
// be a subspace of it).
std::vector<int> ambient_factor_dims(const ClassSpec& spec);
int ambient_dim(const ClassSpec& spec);

// Carrier space H: full ambient for distinguishable, Sym^L / Wedge^L for
// bosons / fermions, the chosen parity sector of Fock space for Gaussian.
int carrier_dim(const ClassSpec& spec);
Mat carrier_projector(const ClassSpec& spec);  // ambient x ambient
Mat carrier_isometry(const ClassSpec& spec);   // ambient x carrier_dim

// The projector P^{2l0} onto the irrep generated by two copies of the class,
// as a dense operator on ambient (x) ambient.
Mat class_projector2(const ClassSpec& spec);

// P^sym of H (x) H embedded in the doubled ambient space.
Mat sym2(const ClassSpec& spec);

// A = P^sym - P^{2l0}; Hermitian, PSD, annihilates |psi psi> exactly for
// class members.
Mat class_operator2(const ClassSpec& spec);

// The same operators compressed to carrier (x) carrier coordinates.
struct CompressedTwoCopy {
  int n;      // carrier dimension
  Mat proj;   // P^{2l0}
  Mat psym;   // P^sym on carrier (x) carrier
  Mat pasym;  // I - psym
  Mat a;      // psym - proj
};
CompressedTwoCopy compressed_two_copy(const ClassSpec& spec);

// <psi psi| (P^sym - P^{2l0}) |psi psi> for a normalized carrier vector in
// ambient coordinates (equals 1 - <psi psi|P^{2l0}|psi psi>).
double pure_invariant(const ClassSpec& spec, const Vec& psi);
double pure_invariant_with(const Mat& proj2, const Vec& psi);

// The purity-sum evaluation of the same invariant for the particle classes
// (distinguishable, bosonic, fermionic); agrees with the dense path.
double pure_invariant_physical(const ClassSpec& spec, const Vec& psi);

// k-copy projector P^{kl0} (dense; throws beyond the dense threshold).
Mat class_projector_k(const ClassSpec& spec, int k);

// Matrix-free application of P^{kl0} (particle classes).
Vec apply_class_projector_k(const ClassSpec& spec, int k, const Vec& v);

// Exact trace of P^{kl0} (= its rank, since it is a projector).
BigRat class_projector_k_trace(const ClassSpec& spec, int k);

// Hook-rule prediction of rank(P^{kl0}).
BigInt class_rank_prediction(const ClassSpec& spec, int k);

// Random class member / random carrier state, in ambient coordinates.
Vec random_member(const ClassSpec& spec, std::mt19937_64& rng);
Vec random_carrier_state(const ClassSpec& spec, std::mt19937_64& rng);

// Gaussian machinery: the closed-form projector P0 onto ker Lambda with
// Lambda = sum_i c_i (x) c_i, and the numeric null-space oracle.
Mat gaussian_p0(int d);
Mat gaussian_lambda(int d);
Mat gaussian_null_oracle(int d);

// Schmidt decomposition of a bipartite vector (coefficients non-increasing).
struct SchmidtResult {
  RealVec coeffs;
  Mat left;   // dA x r, orthonormal columns
  Mat right;  // dB x r
};
SchmidtResult schmidt_decompose(const Vec& psi, int dA, int dB);

// A_n = P_A^{asym,n+1} (x) P_B^{asym,n+1} on (C^dA (x) C^dB)^(x)(n+1).
Mat schmidt_operator(int n, int dA, int dB);

// <psi^(n+1)|A_n|psi^(n+1)> evaluated from the Schmidt coefficients:
// sum over (n+1)-subsets X of prod_{i in X} lambda_i^2.
double schmidt_pure_invariant(const Vec& psi, int dA, int dB, int n);

}  // namespace qcorr
