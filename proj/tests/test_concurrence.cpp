#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcorr/concurrence.hpp"
#include "qcorr/cone.hpp"
#include "qcorr/haar.hpp"
#include "qcorr/witness.hpp"

using namespace qcorr;

namespace {

Mat pure_density(const Vec& v) { return v * v.adjoint(); }

Mat sigma_yy() {
  Mat sy(2, 2);
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  return kron(sy, sy);
}

// 16-dim embedding of an 8-dim even-sector vector.
Vec embed_even(const Vec& v8) {
  auto idx = sector_indices(4, Sector::Plus);
  Vec out = Vec::Zero(16);
  for (int i = 0; i < 8; ++i) out[idx[i]] = v8[i];
  return out;
}

Vec restrict_sector(const Vec& v16, Sector s) {
  auto idx = sector_indices(4, s);
  Vec out(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) out[i] = v16[idx[i]];
  return out;
}

Vec a8_vector() {
  auto eig = herm_eig(a8_state());
  REQUIRE(eig.values[0] == doctest::Approx(1.0).epsilon(1e-10));
  return eig.vectors.col(0);
}

Mat random_two_qubit_density(int rank, std::mt19937_64& rng) {
  Mat rho = Mat::Zero(4, 4);
  for (int i = 0; i < rank; ++i) {
    Vec v = haar_state(4, rng);
    rho += v * v.adjoint();
  }
  return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("conjugations square to the identity") {
  auto rng = make_rng(41);
  std::vector<ConjugationSpec> conjs = {BasisConjugation{sigma_yy()},
                                        MajoranaTilde{4, Sector::Plus},
                                        MajoranaTilde{4, Sector::Minus}};
  for (const auto& c : conjs) {
    const int n = static_cast<int>(conjugation_matrix(c).rows());
    for (int rep = 0; rep < 20; ++rep) {
      Vec v = haar_state(n, rng);
      CHECK((conj_apply(c, conj_apply(c, v)) - v).norm() < 1e-10);
    }
    // Antiunitarity: <theta u|theta v> = conj(<u|v>).
    Vec u = haar_state(n, rng), v = haar_state(n, rng);
    cplx lhs = (conj_apply(c, u).adjoint() * conj_apply(c, v))(0);
    cplx rhs = std::conj((u.adjoint() * v)(0));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("sector conjugation reproduces the Majorana tilde") {
  FockAlgebra f(4);
  auto rng = make_rng(43);
  for (Sector s : {Sector::Plus, Sector::Minus}) {
    auto idx = sector_indices(4, s);
    ConjugationSpec conj = MajoranaTilde{4, s};
    for (int rep = 0; rep < 5; ++rep) {
      // Random Hermitian operator supported on the sector.
      Mat block = ginibre(8, 8, rng);
      block = (block + block.adjoint()).eval();
      Mat full = Mat::Zero(16, 16);
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) full(idx[i], idx[j]) = block(i, j);
      Mat tilded = f.tilde(full);
      Mat tilded_block(8, 8);
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) tilded_block(i, j) = tilded(idx[i], idx[j]);
      CHECK(frob_dist(conj_rho_tilde(conj, block), tilded_block) < 1e-10);
    }
  }
}

TEST_CASE("Wootters concurrence on two qubits") {
  Vec bell(4);
  bell << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
  CHECK(wootters_2q(pure_density(bell)) == doctest::Approx(1.0).epsilon(1e-10));
  auto rng = make_rng(47);
  Vec prod = kron(haar_state(2, rng), haar_state(2, rng));
  CHECK(wootters_2q(pure_density(prod)) < 1e-9);
  // Pure states: C = |<psi|theta psi>|.
  ConjugationSpec yy = BasisConjugation{sigma_yy()};
  for (int rep = 0; rep < 10; ++rep) {
    Vec psi = haar_state(4, rng);
    const double direct = std::abs((psi.adjoint() * conj_apply(yy, psi))(0));
    // sqrt of clamped near-zero eigenvalues contributes ~1e-8 noise
    CHECK(std::abs(uw_concurrence(pure_density(psi), yy) - direct) < 1e-7);
  }
}

TEST_CASE("Werner family: closed form and the 2/3 crossing") {
  Vec bell(4);
  bell << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
  auto family = [&](double p) -> Mat {
    return (1 - p) * pure_density(bell) + p * Mat::Identity(4, 4) / 4.0;
  };
  for (double p : {0.0, 0.2, 0.5, 2.0 / 3.0, 0.8, 1.0})
    CHECK(wootters_2q(family(p)) ==
          doctest::Approx(std::max(0.0, 1 - 1.5 * p)).epsilon(1e-9));
  const double pcr = threshold_solver(
      family, [](const Mat& r) { return wootters_2q(r) - 1e-14; }, 0.0, 1.0);
  CHECK(pcr == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("Wootters zero concurrence matches PPT separability") {
  auto rng = make_rng(53);
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Mat rho = random_two_qubit_density(1 + static_cast<int>(rng() % 4), rng);
    const double c = wootters_2q(rho);
    const bool npt = ppt_entangled(DenseOperator(rho, {2, 2}));
    if (c > 1e-7 || !npt) {  // skip exact-boundary numerical ties
      CHECK((c > 1e-10) == npt);
      ++checked;
    }
  }
  CHECK(checked >= 190);
}

TEST_CASE("Gaussian concurrences on d = 4") {
  FockAlgebra f(4);
  auto rng = make_rng(59);
  SUBCASE("pure Gaussian states of both parities vanish") {
    for (int parity : {+1, -1}) {
      for (int rep = 0; rep < 5; ++rep) {
        Vec g = f.random_pure_gaussian(rng, parity);
        auto c = gauss_concurrences(pure_density(g));
        CHECK(c.c_plus < 1e-7);
        CHECK(c.c_minus < 1e-7);
      }
    }
  }
  SUBCASE("a8 has C_plus = 1") {
    auto c = gauss_concurrences(a8_state());
    CHECK(c.c_plus == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(c.c_minus < 1e-10);
  }
  SUBCASE("depolarized a8 follows max{0, 1 - 11p/8}") {
    for (double p : {0.0, 0.2, 0.5, 8.0 / 11.0, 0.9}) {
      auto c = gauss_concurrences(depolarized_a8(p));
      CHECK(c.c_plus ==
            doctest::Approx(std::max(0.0, 1 - 11 * p / 8)).epsilon(1e-10));
    }
    // Eigenvalue route: the even-sector spectrum is {1 - 15p/16, 7 x p/16}.
    const double p = 0.3;
    auto idx = sector_indices(4, Sector::Plus);
    Mat rho = depolarized_a8(p);
    Mat block(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) block(i, j) = rho(idx[i], idx[j]);
    auto eig = herm_eig(block);
    CHECK(eig.values[0] == doctest::Approx(1 - 15 * p / 16).epsilon(1e-12));
    for (int i = 1; i < 8; ++i)
      CHECK(eig.values[i] == doctest::Approx(p / 16).epsilon(1e-10));
  }
  SUBCASE("invariance under Bogolyubov rotations") {
    Mat rho = depolarized_a8(0.25);
    auto c0 = gauss_concurrences(rho);
    for (int rep = 0; rep < 20; ++rep) {
      RealMat h = RealMat::Zero(8, 8);
      std::normal_distribution<double> gauss01;
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
          h(i, j) = 0.3 * gauss01(rng);
          h(j, i) = -h(i, j);
        }
      Mat u = f.bogolyubov_unitary(h);
      auto c1 = gauss_concurrences(u * rho * u.adjoint());
      CHECK(c1.c_plus == doctest::Approx(c0.c_plus).epsilon(1e-9));
      CHECK(c1.c_minus == doctest::Approx(c0.c_minus).epsilon(1e-9));
    }
  }
  SUBCASE("non-even input is rejected") {
    Vec mixed = Vec::Zero(16);
    mixed[0] = mixed[1] = 1 / std::sqrt(2.0);  // even + odd superposition
    CHECK_THROWS_AS(gauss_concurrences(pure_density(mixed)),
                    std::invalid_argument);
  }
}

TEST_CASE("convex-Gaussian decision") {
  CHECK_FALSE(convex_gaussian(a8_state()).convex_gaussian);
  CHECK(convex_gaussian(Mat::Identity(16, 16) / 16.0).convex_gaussian);
  CHECK(convex_gaussian(depolarized_a8(8.0 / 11.0)).convex_gaussian);
  CHECK_FALSE(convex_gaussian(depolarized_a8(8.0 / 11.0 - 1e-3)).convex_gaussian);
  // Cross-module: a convex-Gaussian state is never detected by the
  // bilinear non-Gaussianity witness.
  auto w = bilinear_witness(GaussSpec{4});
  auto rng = make_rng(61);
  Mat rho = depolarized_a8(0.8);
  for (int rep = 0; rep < 50; ++rep) {
    Vec s = haar_state(16, rng);
    Mat pc = carrier_projector(ClassSpec(GaussSpec{4}));
    Vec sc = pc * s;
    sc /= sc.norm();
    CHECK(detect2(w, rho, pure_density(sc)) <= 1e-9);
  }
}

TEST_CASE("generalized Schmidt decomposition") {
  FockAlgebra f(4);
  auto rng = make_rng(67);
  ConjugationSpec theta = MajoranaTilde{4, Sector::Plus};
  SUBCASE("Gaussian input gives p = 0, a8 gives p = 1/sqrt(2)") {
    Vec g = restrict_sector(f.random_pure_gaussian(rng, +1), Sector::Plus);
    CHECK(generalized_schmidt(g).p < 1e-8);
    Vec a8 = restrict_sector(a8_vector(), Sector::Plus);
    CHECK(generalized_schmidt(a8).p ==
          doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-9));
  }
  SUBCASE("forward construction roundtrip") {
    for (double p0 : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 1 / std::sqrt(2.0)}) {
      Vec g = restrict_sector(f.random_pure_gaussian(rng, +1), Sector::Plus);
      Vec psi = std::sqrt(1 - p0 * p0) * g + p0 * conj_apply(theta, g);
      REQUIRE(std::abs(psi.norm() - 1.0) < 1e-9);
      auto gs = generalized_schmidt(psi);
      CHECK(gs.p == doctest::Approx(p0).epsilon(1e-9));
      // C_+ of the family equals 2 p sqrt(1 - p^2).
      auto c = gauss_concurrences(pure_density(embed_even(psi)));
      CHECK(std::abs(c.c_plus - 2 * p0 * std::sqrt(1 - p0 * p0)) < 1e-7);
    }
  }
  SUBCASE("decomposition of random even vectors") {
    for (int rep = 0; rep < 10; ++rep) {
      Vec psi = haar_state(8, rng);
      auto gs = generalized_schmidt(psi);
      Vec recon = std::sqrt(1 - gs.p * gs.p) * gs.psi_g +
                  gs.p * conj_apply(theta, gs.psi_g);
      // Equality up to the global phase absorbed during decomposition.
      CHECK(std::abs((psi.adjoint() * recon)(0)) ==
            doctest::Approx(1.0).epsilon(1e-9));
      CHECK(std::abs(gs.psi_g.norm() - 1.0) < 1e-9);
      // psi_g is Gaussian: the quadratic class invariant vanishes.
      Vec g16 = embed_even(gs.psi_g);
      CHECK(pure_invariant(ClassSpec(GaussSpec{4}), g16) < 1e-9);
      // theta psi_g is orthogonal to psi_g.
      CHECK(std::abs((gs.psi_g.adjoint() * conj_apply(theta, gs.psi_g))(0)) <
            1e-9);
    }
  }
}

TEST_CASE("Gaussian fidelity and trace-distance bounds") {
  FockAlgebra f(4);
  auto rng = make_rng(71);
  Vec g = f.random_pure_gaussian(rng, +1);
  CHECK(gauss_fidelity(pure_density(g)).f == doctest::Approx(1.0).epsilon(1e-9));
  auto fa8 = gauss_fidelity(a8_state());
  // C_+(a8) = 1 - O(1e-15) and sqrt(1 - C^2) amplifies that to ~1e-7
  CHECK(fa8.f == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(fa8.trace_lo == doctest::Approx(1 - std::sqrt(0.5)).epsilon(1e-7));
  CHECK(fa8.trace_hi == doctest::Approx(std::sqrt(0.5)).epsilon(1e-7));
  for (int rep = 0; rep < 10; ++rep) {
    Vec psi8 = haar_state(8, rng);
    auto gs = generalized_schmidt(psi8);
    auto fid = gauss_fidelity(pure_density(embed_even(psi8)));
    const double c = 2 * gs.p * std::sqrt(1 - gs.p * gs.p);
    CHECK(fid.f == doctest::Approx(0.5 + 0.5 * std::sqrt(1 - c * c))
                       .epsilon(1e-7));
    // Direct overlap with the Gaussian part never beats the fidelity.
    const double overlap =
        std::norm((psi8.adjoint() * (std::exp(cplx(0, 0)) * gs.psi_g))(0));
    CHECK(overlap <= fid.f + 1e-9);
    CHECK(1 - gs.p * gs.p == doctest::Approx(overlap).epsilon(1e-6));
  }
  // Odd-sector support is rejected.
  Vec odd = Vec::Zero(16);
  odd[1] = 1.0;
  CHECK_THROWS_AS(gauss_fidelity(pure_density(odd)), std::invalid_argument);
}

TEST_CASE("a8 depolarization threshold is 8/11") {
  const double pcr = threshold_solver(
      depolarized_a8,
      [](const Mat& r) { return gauss_concurrences(r).c_plus - 1e-14; }, 0.0,
      1.0);
  CHECK(pcr == doctest::Approx(8.0 / 11.0).epsilon(1e-9));
}

TEST_CASE("two-fermion depolarization thresholds for d = 5, 6") {
  auto rng = make_rng(73);
  for (int d : {5, 6}) {
    ClassSpec spec = FermSpec{d, 2};
    auto w = bilinear_witness(spec);
    const int n = d * d;
    Mat pasym1 = (Mat::Identity(n, n) -
                  permutation_matrix(std::vector<int>{d, d}, {1, 0})) /
                 2.0;
    Mat mix = pasym1 * 2.0 / (static_cast<double>(d) * (d - 1));
    std::vector<std::vector<double>> lambdas = {
        {1.0, 1.0}, {0.9, 0.4}, {0.6, 0.5, 0.2}};
    for (const auto& lam : lambdas) {
      if (static_cast<int>(lam.size()) > d / 2) continue;
      Vec psi = two_fermion_state(d, lam);
      // Witness identities behind the closed form.
      double sum4 = 0, norm2 = 0;
      for (double l : lam) norm2 += l * l;
      for (double l : lam) sum4 += std::pow(l * l / norm2, 2);
      Vec pp = kron(psi, psi);
      CHECK((pp.adjoint() * w.a * pp).real()(0) ==
            doctest::Approx((1 - sum4) / 3).epsilon(1e-9));
      CHECK((kron(Mat::Identity(n, n), pure_density(psi)) * w.a)
                .trace()
                .real() ==
            doctest::Approx((d - 2.0) * (d - 3.0) / 12.0).epsilon(1e-9));
      auto family = [&](double p) -> Mat {
        return (1 - p) * pure_density(psi) + p * mix;
      };
      auto detector = [&](const Mat& rho) {
        return detect2(w, rho, pure_density(psi));
      };
      const double pcr = threshold_solver(family, detector, 0.0, 1.0);
      CHECK(pcr == doctest::Approx(ferm_depol_pcr(d, lam)).epsilon(1e-9));
    }
  }
}

TEST_CASE("threshold solver input validation") {
  auto family = [](double p) { return Mat::Identity(2, 2) * p; };
  auto detector = [](const Mat& m) { return m.trace().real() + 1.0; };
  CHECK_THROWS_AS(threshold_solver(family, detector, 0.0, 1.0),
                  std::invalid_argument);
}
