// Dense complex operators and state vectors with tensor-factor bookkeeping.
//
// Conventions (fixed globally):
//  * row-major Kronecker products: in A (x) B the A-index is the most
//    significant block index;
//  * factor_dims lists tensor factors from most significant to least
//    significant, and their product equals the total dimension.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

// Largest dimension at which we are willing to materialize dense operators.
inline constexpr int kDenseThreshold = 4096;

struct DenseOperator {
  Mat m;
  std::vector<int> factor_dims;

  DenseOperator() = default;
  DenseOperator(Mat mat, std::vector<int> dims);

  int dim() const { return static_cast<int>(m.rows()); }
  bool is_hermitian(double tol = 1e-12) const;

  static DenseOperator identity(std::vector<int> dims);
};

struct StateVector {
  Vec v;
  std::vector<int> factor_dims;

  StateVector() = default;
  StateVector(Vec vec, std::vector<int> dims);

  int dim() const { return static_cast<int>(v.size()); }
  double norm() const { return v.norm(); }
};

int product_of(const std::vector<int>& dims);
std::vector<int> concat_dims(const std::vector<int>& a, const std::vector<int>& b);

Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);
StateVector kron(const StateVector& a, const StateVector& b);

// Reduced operator on the kept factors (indices into factor_dims, ascending
// output order follows the order given in `keep`).
DenseOperator partial_trace(const DenseOperator& rho, const std::vector<int>& keep);

// Transpose a single tensor factor in the computational basis.
DenseOperator partial_transpose(const DenseOperator& rho, int factor);

struct EigResult {
  RealVec values;  // non-increasing
  Mat vectors;     // orthonormal columns, column i <-> values[i]
};

// Hermitian eigendecomposition with deterministic output: eigenvalues sorted
// non-increasing, each eigenvector phase-fixed so its first non-negligible
// entry is real and positive.
EigResult herm_eig(const Mat& a, double herm_tol = 1e-10);

// Frobenius distance helper used all over the tests.
double frob_dist(const Mat& a, const Mat& b);

}  // namespace qcorr
