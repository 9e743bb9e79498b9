#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcorr/dense.hpp"
#include "qcorr/haar.hpp"
#include "qcorr/rational.hpp"
#include "qcorr/symmetrizer.hpp"

using namespace qcorr;

namespace {

Mat random_density(int n, std::mt19937_64& rng) {
  Mat g = ginibre(n, n, rng);
  Mat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("kron follows the row-major convention") {
  Mat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  Mat ab = kron(a, b);
  CHECK(ab.rows() == 4);
  CHECK(ab(0, 1) == cplx(1.0));   // a(0,0) * b(0,1)
  CHECK(ab(0, 3) == cplx(2.0));   // a(0,1) * b(0,1)
  CHECK(ab(2, 1) == cplx(3.0));   // a(1,0) * b(0,1)

  Vec u(2), v(3);
  u << 1, cplx(0, 1);
  v << 1, 2, 3;
  Vec uv = kron(u, v);
  CHECK(uv.size() == 6);
  CHECK(uv[4] == cplx(0, 2));  // u[1] * v[1]
}

TEST_CASE("partial trace reproduces marginals of product states") {
  auto rng = make_rng(7);
  Mat rho_a = random_density(2, rng);
  Mat rho_b = random_density(3, rng);
  DenseOperator rho(kron(rho_a, rho_b), {2, 3});
  CHECK(frob_dist(partial_trace(rho, {0}).m, rho_a) < 1e-12);
  CHECK(frob_dist(partial_trace(rho, {1}).m, rho_b) < 1e-12);

  // Tracing nothing away returns the operator itself.
  CHECK(frob_dist(partial_trace(rho, {0, 1}).m, rho.m) < 1e-12);

  // Reordered keep list permutes the factors.
  DenseOperator swapped = partial_trace(rho, {1, 0});
  CHECK(frob_dist(swapped.m, kron(rho_b, rho_a)) < 1e-12);
}

TEST_CASE("partial trace is linear and trace-preserving on entangled states") {
  auto rng = make_rng(11);
  Mat rho = random_density(12, rng);
  DenseOperator op(rho, {2, 3, 2});
  DenseOperator red = partial_trace(op, {0, 2});
  CHECK(red.dim() == 4);
  CHECK(std::abs(red.m.trace() - rho.trace()) < 1e-12);
  CHECK(red.is_hermitian(1e-12));
}

TEST_CASE("partial transpose is an involution and detects the Bell state") {
  Vec bell(4);
  bell << 1, 0, 0, 1;
  bell /= std::sqrt(2.0);
  DenseOperator rho(bell * bell.adjoint(), {2, 2});
  DenseOperator pt = partial_transpose(rho, 1);
  CHECK(frob_dist(partial_transpose(pt, 1).m, rho.m) < 1e-14);
  auto eig = herm_eig(pt.m);
  CHECK(eig.values.minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("herm_eig returns non-increasing values and orthonormal vectors") {
  auto rng = make_rng(3);
  Mat g = ginibre(6, 6, rng);
  Mat h = g + g.adjoint();
  auto eig = herm_eig(h);
  for (int i = 0; i + 1 < 6; ++i) CHECK(eig.values[i] >= eig.values[i + 1]);
  CHECK(frob_dist(eig.vectors.adjoint() * eig.vectors, Mat::Identity(6, 6)) < 1e-10);
  Mat rebuilt = eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
  CHECK(frob_dist(rebuilt, h) < 1e-9);
  CHECK_THROWS(herm_eig(g));
}

TEST_CASE("factor permutations act as advertised on product vectors") {
  auto rng = make_rng(5);
  Vec x = haar_state(2, rng), y = haar_state(3, rng), z = haar_state(2, rng);
  Vec prod = kron(kron(x, y), z);
  // sigma = {2, 1, 0} puts slot-2 content into slot 0: z (x) y (x) x.
  Vec permuted = apply_factor_permutation(prod, {2, 3, 2}, {2, 1, 0});
  CHECK((permuted - kron(kron(z, y), x)).norm() < 1e-14);

  Mat u = permutation_matrix({2, 3, 2}, {2, 1, 0});
  CHECK((u * prod - permuted).norm() < 1e-14);
  CHECK(frob_dist(u * u.adjoint(), Mat::Identity(12, 12)) < 1e-14);

  CHECK_THROWS(apply_factor_permutation(prod, {2, 3, 2}, {1, 0, 2}));
}

TEST_CASE("permutation sign by cycle count") {
  CHECK(permutation_sign({0, 1, 2}) == 1);
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({1, 2, 0}) == 1);
  CHECK(permutation_sign({3, 2, 1, 0}) == 1);
  CHECK(permutation_sign({1, 0, 3, 2}) == 1);
  CHECK(permutation_sign({0, 2, 1}) == -1);
}

TEST_CASE("symmetrizers are projectors with the right rank") {
  // Sym^3 of C^2 inside (C^2)^3: dimension C(2+3-1,3) = 4.
  Mat ps = symmetrizer({2, 2, 2}, {0, 1, 2}, false);
  CHECK(frob_dist(ps * ps, ps) < 1e-12);
  CHECK(frob_dist(ps, ps.adjoint()) < 1e-12);
  CHECK(ps.trace().real() == doctest::Approx(4.0));

  // Antisym^2 of C^3: dimension C(3,2) = 3, tensored with an idle factor.
  Mat pa = symmetrizer({3, 2, 3}, {0, 2}, true);
  CHECK(frob_dist(pa * pa, pa) < 1e-12);
  CHECK(pa.trace().real() == doctest::Approx(3.0 * 2.0));

  // Antisym^3 of C^2 vanishes.
  Mat zero = symmetrizer({2, 2, 2}, {0, 1, 2}, true);
  CHECK(zero.norm() < 1e-12);

  Mat pair = pair_symmetrizer({2, 2}, 0, 1);
  Mat swap01 = permutation_matrix({2, 2}, {1, 0});
  CHECK(frob_dist(pair, (Mat::Identity(4, 4) + swap01) / 2.0) < 1e-14);
}

TEST_CASE("block swap exchanges whole groups of factors") {
  auto rng = make_rng(9);
  Vec a = haar_state(4, rng), b = haar_state(4, rng);
  Vec prod = kron(a, b);  // dims {2,2} x {2,2}
  Mat s = block_swap({2, 2, 2, 2}, {0, 1}, {2, 3});
  CHECK((s * prod - kron(b, a)).norm() < 1e-14);
  CHECK(frob_dist(s * s, Mat::Identity(16, 16)) < 1e-14);
}

TEST_CASE("symmetrized_product_sum matches the explicit permutation sum") {
  auto rng = make_rng(13);
  std::vector<Vec> vs;
  for (int i = 0; i < 3; ++i) vs.push_back(haar_state(3, rng));
  Vec fast = symmetrized_product_sum(vs);
  Vec slow = Vec::Zero(27);
  std::vector<int> perm = {0, 1, 2};
  do {
    slow += kron(kron(vs[perm[0]], vs[perm[1]]), vs[perm[2]]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK((fast - slow).norm() < 1e-12);

  // For identical vectors this equals k! times the product vector.
  std::vector<Vec> same(4, vs[0]);
  Vec quad = kron(kron(vs[0], vs[0]), kron(vs[0], vs[0]));
  CHECK((symmetrized_product_sum(same) - 24.0 * quad).norm() < 1e-12);
}

TEST_CASE("haar unitaries are unitary and deterministic per seed") {
  auto rng1 = make_rng(42);
  auto rng2 = make_rng(42);
  Mat u1 = haar_unitary(5, rng1);
  Mat u2 = haar_unitary(5, rng2);
  CHECK(frob_dist(u1, u2) == 0.0);
  CHECK(frob_dist(u1 * u1.adjoint(), Mat::Identity(5, 5)) < 1e-12);

  auto rng3 = make_rng(42, 1);  // different stream must decorrelate
  Mat u3 = haar_unitary(5, rng3);
  CHECK(frob_dist(u1, u3) > 1e-3);
}

TEST_CASE("haar first-column statistics match the known moment") {
  // E |U_00|^2 = 1/n for Haar; check within 5 sigma at n = 4.
  auto rng = make_rng(2024);
  const int samples = 4000;
  double acc = 0.0;
  for (int s = 0; s < samples; ++s) {
    Mat u = haar_unitary(4, rng);
    acc += std::norm(u(0, 0));
  }
  double mean = acc / samples;
  // Var |U_00|^2 = 1/n^2 * (n-1)/(n+1) roughly; generous band.
  CHECK(std::abs(mean - 0.25) < 5.0 * 0.25 / std::sqrt(double(samples)));
}

TEST_CASE("rational helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(2000, 1000) % 7 >= 0);  // just exercises big values
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);

  CHECK(rational_to_string(BigRat(3, 1)) == "3");
  CHECK(rational_to_string(BigRat(-4, 6)) == "-2/3");
  CHECK(to_double(BigRat(1, 2)) == doctest::Approx(0.5));
}

TEST_CASE("rational matrix inverse is exact") {
  std::vector<std::vector<BigRat>> a = {
      {BigRat(2), BigRat(1), BigRat(0)},
      {BigRat(1), BigRat(3), BigRat(1)},
      {BigRat(0), BigRat(1), BigRat(4)},
  };
  auto inv = rational_inverse(a);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      BigRat acc = 0;
      for (size_t k = 0; k < 3; ++k) acc += a[i][k] * inv[k][j];
      CHECK(acc == (i == j ? BigRat(1) : BigRat(0)));
    }
  std::vector<std::vector<BigRat>> sing = {{BigRat(1), BigRat(2)},
                                           {BigRat(2), BigRat(4)}};
  CHECK_THROWS(rational_inverse(sing));
}
