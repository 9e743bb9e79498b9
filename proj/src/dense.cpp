#include "qcorr/dense.hpp"

#include <numeric>

namespace qcorr {

int product_of(const std::vector<int>& dims) {
  long long p = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("factor dimension must be positive");
    p *= d;
    if (p > (1LL << 30)) throw std::invalid_argument("tensor dimension overflow");
  }
  return static_cast<int>(p);
}

std::vector<int> concat_dims(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

DenseOperator::DenseOperator(Mat mat, std::vector<int> dims)
    : m(std::move(mat)), factor_dims(std::move(dims)) {
  if (m.rows() != m.cols()) throw std::invalid_argument("operator must be square");
  if (product_of(factor_dims) != m.rows())
    throw std::invalid_argument("factor_dims product does not match dimension");
}

bool DenseOperator::is_hermitian(double tol) const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

DenseOperator DenseOperator::identity(std::vector<int> dims) {
  int n = product_of(dims);
  return DenseOperator(Mat::Identity(n, n), std::move(dims));
}

StateVector::StateVector(Vec vec, std::vector<int> dims)
    : v(std::move(vec)), factor_dims(std::move(dims)) {
  if (product_of(factor_dims) != v.size())
    throw std::invalid_argument("factor_dims product does not match vector size");
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  return DenseOperator(kron(a.m, b.m), concat_dims(a.factor_dims, b.factor_dims));
}

StateVector kron(const StateVector& a, const StateVector& b) {
  return StateVector(kron(a.v, b.v), concat_dims(a.factor_dims, b.factor_dims));
}

namespace {

// Decompose flat index into digits (most significant factor first).
void to_digits(int idx, const std::vector<int>& dims, std::vector<int>& digits) {
  for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
    digits[f] = idx % dims[f];
    idx /= dims[f];
  }
}

int from_digits(const std::vector<int>& digits, const std::vector<int>& dims) {
  int idx = 0;
  for (size_t f = 0; f < dims.size(); ++f) idx = idx * dims[f] + digits[f];
  return idx;
}

}  // namespace

DenseOperator partial_trace(const DenseOperator& rho, const std::vector<int>& keep) {
  const auto& dims = rho.factor_dims;
  const int nf = static_cast<int>(dims.size());
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  std::vector<bool> kept(nf, false);
  for (int f : keep) {
    if (f < 0 || f >= nf) throw std::out_of_range("keep index out of range");
    kept[f] = true;
  }
  std::vector<int> traced;
  std::vector<int> keep_dims, traced_dims;
  for (int f : keep) keep_dims.push_back(dims[f]);
  for (int f = 0; f < nf; ++f)
    if (!kept[f]) {
      traced.push_back(f);
      traced_dims.push_back(dims[f]);
    }
  const int dk = product_of(keep_dims);
  const int dt = traced_dims.empty() ? 1 : product_of(traced_dims);

  Mat out = Mat::Zero(dk, dk);
  std::vector<int> row(nf), col(nf), kd(keep.size()), ld(keep.size()), td(traced.size());
  for (int i = 0; i < dk; ++i) {
    to_digits(i, keep_dims, kd);
    for (int j = 0; j < dk; ++j) {
      to_digits(j, keep_dims, ld);
      cplx acc = 0.0;
      for (int t = 0; t < dt; ++t) {
        if (!traced.empty()) to_digits(t, traced_dims, td);
        for (size_t f = 0; f < keep.size(); ++f) {
          row[keep[f]] = kd[f];
          col[keep[f]] = ld[f];
        }
        for (size_t f = 0; f < traced.size(); ++f) {
          row[traced[f]] = td[f];
          col[traced[f]] = td[f];
        }
        acc += rho.m(from_digits(row, dims), from_digits(col, dims));
      }
      out(i, j) = acc;
    }
  }
  return DenseOperator(std::move(out), keep_dims);
}

DenseOperator partial_transpose(const DenseOperator& rho, int factor) {
  const auto& dims = rho.factor_dims;
  const int nf = static_cast<int>(dims.size());
  if (factor < 0 || factor >= nf) throw std::out_of_range("factor out of range");
  const int n = rho.dim();
  Mat out(n, n);
  std::vector<int> r(nf), c(nf);
  for (int i = 0; i < n; ++i) {
    to_digits(i, dims, r);
    for (int j = 0; j < n; ++j) {
      to_digits(j, dims, c);
      std::vector<int> rr = r, cc = c;
      std::swap(rr[factor], cc[factor]);
      out(from_digits(rr, dims), from_digits(cc, dims)) = rho.m(i, j);
    }
  }
  return DenseOperator(std::move(out), dims);
}

EigResult herm_eig(const Mat& a, double herm_tol) {
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw std::invalid_argument("herm_eig: input is not Hermitian within tolerance");
  Mat sym = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("herm_eig: eigensolver failed");
  const int n = static_cast<int>(a.rows());
  EigResult out;
  out.values = RealVec(n);
  out.vectors = Mat(n, n);
  // Eigen returns ascending order; reverse to non-increasing.
  for (int i = 0; i < n; ++i) {
    out.values[i] = es.eigenvalues()[n - 1 - i];
    Vec v = es.eigenvectors().col(n - 1 - i);
    // Phase fix: first entry with non-negligible modulus made real positive.
    for (int r = 0; r < n; ++r) {
      if (std::abs(v[r]) > 1e-9) {
        v *= std::conj(v[r]) / std::abs(v[r]);
        break;
      }
    }
    out.vectors.col(i) = v;
  }
  return out;
}

double frob_dist(const Mat& a, const Mat& b) { return (a - b).norm(); }

}  // namespace qcorr
