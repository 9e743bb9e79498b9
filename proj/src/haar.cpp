#include "qcorr/haar.hpp"

namespace qcorr {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s ^= stream * 0xda942042e4dd58b5ULL;
  std::uint64_t b = splitmix64(s);
  std::uint64_t c = splitmix64(s);
  std::uint64_t d = splitmix64(s);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                    static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(d >> 32)};
  return std::mt19937_64(seq);
}

Mat ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

Mat haar_unitary(int n, std::mt19937_64& rng) {
  Mat g = ginibre(n, n, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: multiply column j by the phase of R(j, j) so the
  // distribution is exactly Haar (Mezzadri's recipe).
  for (int j = 0; j < n; ++j) {
    cplx rjj = r(j, j);
    double a = std::abs(rjj);
    q.col(j) *= (a > 0.0) ? rjj / a : cplx(1.0, 0.0);
  }
  return q;
}

Vec haar_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(g(rng), g(rng));
  return v / v.norm();
}

}  // namespace qcorr
