// Fermionic Fock space on d modes (dimension 2^d), Jordan-Wigner ladder
// operators, Majorana generators, Bogolyubov rotations and pure fermionic
// Gaussian states.
//
// Basis convention: the occupation of mode k (k = 1..d) is bit k-1 of the
// Fock index, i.e. mode 1 is the least significant bit.
#pragma once

#include <random>

#include "qcorr/dense.hpp"

namespace qcorr {

class FockAlgebra {
 public:
  explicit FockAlgebra(int modes);

  int modes() const { return d_; }
  int dim() const { return 1 << d_; }

  // Annihilation operator a_k, k = 1..d, with Jordan-Wigner string over the
  // lower modes.
  const Mat& a(int k) const;
  Mat adag(int k) const { return a(k).adjoint(); }

  // Majorana generators c_m, m = 1..2d:
  //   c_{2k-1} = a_k + a_k^dag,  c_{2k} = i (a_k - a_k^dag).
  const Mat& c(int m) const;

  // Parity operator Q = prod_k (1 - 2 a_k^dag a_k) = i^d c_1 ... c_{2d}.
  Mat parity() const;

  // Vacuum |0...0> and the occupation state prod_{j in occupied} a_j^dag |0>
  // (creation operators applied in decreasing mode order, so the amplitude of
  // the occupied bit pattern is +1).
  Vec vacuum() const;
  Vec occupation_state(const std::vector<int>& occupied) const;

  // Hermitian Majorana monomial B_S = i^{|S|/2} prod_{m in S} c_m for an even
  // subset S (ascending factor order); B_S^2 = I.
  Mat majorana_monomial(const std::vector<int>& subset) const;

  // Majorana correlation matrix M_{kl} = (i/2) tr(rho [c_k, c_l]); a state is
  // pure Gaussian iff M M^T = I. Requires rho to commute with parity.
  RealMat correlation_matrix(const Mat& rho) const;

  // Bogolyubov rotation U = exp(H) with H = sum_{k<l} h_{kl} c_k c_l for a
  // real antisymmetric h; U is unitary and U c_l U^dag = sum_k R_{kl} c_k
  // with R = exp(2h) in SO(2d).
  Mat bogolyubov_unitary(const RealMat& h) const;

  // The SO(2d) rotation implemented by a Gaussian unitary u:
  //   R_{kl} = (1 / 2^d) tr(c_k u c_l u^dag).
  RealMat rotation_of(const Mat& u) const;

  // Random pure fermionic Gaussian state: Bogolyubov rotation of the vacuum
  // (parity +1) or of the one-particle state |0...0,1> (parity -1).
  Vec random_pure_gaussian(std::mt19937_64& rng, int parity = +1) const;

  // The "tilde" conjugation on operators: expand x = sum_S beta_S B_S over
  // even Majorana monomials and flip the sign of beta_S when |S| = 2 mod 4.
  // Requires x to be supported on the even monomials (parity-preserving).
  Mat tilde(const Mat& x) const;

  // Even subsets of {1..2d} in the fixed enumeration used by tilde().
  const std::vector<std::vector<int>>& even_subsets() const;

 private:
  int d_;
  std::vector<Mat> a_;  // a_[k-1]
  std::vector<Mat> c_;  // c_[m-1]
  mutable std::vector<std::vector<int>> even_subsets_;
  mutable std::vector<Mat> even_monomials_;
  void build_even_basis() const;
};

// The d = 4 sixteen-dimensional stabilizer state
//   a8 = (1/16)(I + S1)(I + S2)(I + S3)(I + Q)
// with S1 = -c1 c2 c5 c6, S2 = -c2 c3 c6 c7, S3 = -c1 c2 c3 c4.
Mat a8_state();

}  // namespace qcorr
