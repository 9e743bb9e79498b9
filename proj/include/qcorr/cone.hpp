// Group-invariant witness cones: the commutant bases of the two-copy
// representation for each class, the linear-inequality description of the
// cone of invariant bilinear witnesses, its extreme rays, and the
// ultimate-strength detector built from them.
//
// Coefficient conventions (order of invariant_basis):
//   dist:  S^X indexed by subsets X of {1..L} as bitmasks 0 .. 2^L - 1
//   bos:   S_b^k, k = 0..L   (tr((rho (x) sigma) S_b^k) = tr(rho_(k) sigma_(k)))
//   ferm:  S_f^k, k = 0..L   (requires 2L <= d for the cone description)
//   gauss: C_k, k = 0..floor(d/2) (sector-sandwiched Majorana pair sums)
#pragma once

#include "qcorr/classes.hpp"

namespace qcorr {

// Dense two-copy commutant basis operators, in the order documented above.
std::vector<Mat> invariant_basis(const ClassSpec& spec);

struct ConeElement {
  ClassSpec spec;
  std::vector<BigRat> coeffs;  // over invariant_basis(spec)
};

// The matrix of the cone's inequality system: the element belongs to the
// cone iff rows * coeffs <= 0 componentwise (exact rationals).
std::vector<std::vector<BigRat>> cone_inequalities(const ClassSpec& spec);

// The Gaussian coefficient matrix b_k^n of the inequality system, exact for
// any d (not limited by the dense-operator size gate).
std::vector<std::vector<BigRat>> gauss_cone_matrix(int d);

bool cone_membership(const ConeElement& e);

// Extreme rays: closed forms for dist/bos/ferm, exact inversion of the
// inequality matrix for gauss. Fermionic requires 2L <= d.
std::vector<ConeElement> extreme_rays(const ClassSpec& spec);

// Dense operator of a cone element.
Mat cone_operator(const ConeElement& e);

// max over extreme rays of lambda_max{ tr_1((rho (x) I) V) }; > 0 iff some
// invariant cone witness detects rho.
double optimal_detect(const Mat& rho, const ClassSpec& spec);

// Inclusion-exclusion between the b_Y = sum_{X subset Y} a_X coordinates
// and back (dist cone bookkeeping).
std::vector<BigRat> subsets_partial_sums(const std::vector<BigRat>& a, int L);
std::vector<BigRat> subsets_moebius(const std::vector<BigRat>& b, int L);

// PPT baseline: min eigenvalue of the partial transpose < -1e-10.
bool ppt_entangled(const DenseOperator& rho);

}  // namespace qcorr
