// Bilinear and k-linear correlation witnesses with exact rational constants.
//
// Bilinear: V = A - c P^asym on the doubled ambient space, where A is the
// class operator and c is the class's optimal constant:
//   dist / bos:  c = 1 - 2^{1-L}
//   ferm:        c = 1 - 2 / (L + 1 - max{0, 2L - d})
//   gauss:       c = 1 - a_d (per parity sector, asserted for d <= 1000).
// tr((rho1 (x) rho2) V) > 0 implies both states are correlated.
//
// k-linear: V = A - (k-1)(I - P^{sym,k}) with 0 <= A <= P^{sym,k};
// tr((rho_1 (x) ... (x) rho_k) V) > 0 implies all inputs are correlated.
#pragma once

#include <functional>

#include "qcorr/classes.hpp"

namespace qcorr {

// Detection threshold: values above it count as "detected"; at exact
// criticality the implication is vacuous and we report "not detected".
inline constexpr double kDetectThreshold = 1e-10;

struct BilinearWitness {
  ClassSpec spec;
  BigRat c;      // exact constant
  BigRat alpha;  // tr(V P^sym) / dim Sym^2(carrier) = X
  BigRat beta;   // tr(V P^asym) / dim Asym^2(carrier) = -c
  Mat a;         // class operator A = P^sym - P^{2l0}
  Mat pasym;     // carrier-sandwiched antisymmetric projector
  Mat v;         // A - c P^asym
};

// Exact witness constant for a class.
BigRat bilinear_constant(const ClassSpec& spec);

// The Gaussian constant a_d in c_d = 1 - a_d, evaluated exactly; the closed
// form is asserted for d <= 1000.
BigRat gauss_a_constant(int d);

// Exact X = tr(A) / dim Sym^2(carrier) (the Haar average of the bilinear
// form; also the alpha parameter of the witness).
BigRat class_x_parameter(const ClassSpec& spec);

BilinearWitness bilinear_witness(const ClassSpec& spec);

// tr((rho1 (x) rho2) V); symmetric in its two state arguments.
double detect2(const BilinearWitness& w, const Mat& rho1, const Mat& rho2);

// k-linear witness: A supplied as a matrix-free map on the k-copy space.
struct MultilinearWitness {
  int k;
  std::vector<int> single_dims;  // tensor factors of one copy
  std::function<Vec(const Vec&)> apply_a;
};

// The class's k-linear witness with A = P^{sym,k}-projector difference
// evaluated matrix-free through apply_class_projector_k.
MultilinearWitness multilinear_witness(const ClassSpec& spec, int k);

// Symmetrization over the k copies, matrix-free.
Vec symmetrize_copies(const std::vector<int>& single_dims, int k, const Vec& v);

// <(x)_i v_i | P^{sym,k} | (x)_i v_i> for unit vectors (the "sym overlap").
double sym_overlap(const std::vector<int>& single_dims,
                   const std::vector<Vec>& vs);

// tr((rho_1 (x) ... (x) rho_k) V) with V = A - (k-1)(I - P^{sym,k}),
// evaluated by eigendecomposing each rho_i and summing over weighted pure
// tuples (never materializes a k-copy operator). Eigenvalues below rank_tol
// are dropped.
double detect_k(const MultilinearWitness& w, const std::vector<Mat>& rhos,
                double rank_tol = 1e-12);

}  // namespace qcorr
