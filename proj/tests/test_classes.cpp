#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcorr/classes.hpp"
#include "qcorr/gme.hpp"
#include "qcorr/haar.hpp"

using namespace qcorr;

namespace {

const std::vector<ClassSpec> kSmallSpecs = {
    DistSpec{{2, 3}}, BosSpec{2, 2}, FermSpec{3, 2},
    GaussSpec{2, Sector::Plus}, GaussSpec{2, Sector::Minus}};

}  // namespace

TEST_CASE("two-copy class projectors are Hermitian idempotents") {
  for (const auto& spec : kSmallSpecs) {
    CAPTURE(class_name(spec));
    Mat p = class_projector2(spec);
    CHECK(frob_dist(p, p.adjoint()) < 1e-12);
    CHECK(frob_dist(p * p, p) < 1e-11);
    Mat s = sym2(spec);
    CHECK(frob_dist(s * s, s) < 1e-11);
    // P^{2l0} lives inside the symmetric subspace of H (x) H.
    CHECK(frob_dist(s * p, p) < 1e-11);
    // A = P^sym - P^{2l0} is PSD.
    auto eig = herm_eig(class_operator2(spec));
    CHECK(eig.values.minCoeff() > -1e-11);
  }
}

TEST_CASE("two-copy projector traces match the rank predictions") {
  CHECK(class_projector2(DistSpec{{2, 3}}).trace().real() ==
        doctest::Approx(3.0 * 6.0).epsilon(1e-12));
  CHECK(class_rank_prediction(DistSpec{{2, 3}}, 2) == 18);

  CHECK(class_projector2(BosSpec{2, 2}).trace().real() ==
        doctest::Approx(5.0).epsilon(1e-12));  // dim Sym^4 C^2
  CHECK(class_rank_prediction(BosSpec{2, 2}, 2) == 5);

  // Fermionic traces are dim of the (2,2) irrep: 1, 6, 20 for d = 2, 3, 4.
  for (int d : {2, 3, 4}) {
    ClassSpec s = FermSpec{d, 2};
    BigInt expect = dim_irrep({2, 2}, d);
    CHECK(class_projector2(s).trace().real() ==
          doctest::Approx(to_double(BigRat(expect, 1))).epsilon(1e-11));
    CHECK(class_rank_prediction(s, 2) == expect);
    CHECK(class_projector_k_trace(s, 2) == BigRat(expect, 1));
  }

  // The Gaussian sector sandwich carries half of tr P0 = C(2d, d).
  for (int d : {2, 3}) {
    double half = to_double(BigRat(binomial(2 * d, d), 2));
    CHECK(class_projector2(GaussSpec{d, Sector::Plus}).trace().real() ==
          doctest::Approx(half).epsilon(1e-11));
    CHECK(class_projector2(GaussSpec{d, Sector::Minus}).trace().real() ==
          doctest::Approx(half).epsilon(1e-11));
    CHECK(class_projector_k_trace(GaussSpec{d, Sector::Plus}, 2) ==
          BigRat(binomial(2 * d, d), 2));
  }
}

TEST_CASE("class members are annihilated by the class operator") {
  auto rng = make_rng(42);
  for (const auto& spec : kSmallSpecs) {
    CAPTURE(class_name(spec));
    Mat a = class_operator2(spec);
    for (int rep = 0; rep < 3; ++rep) {
      Vec psi = random_member(spec, rng);
      CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
      Vec proj = carrier_projector(spec) * psi;
      CHECK((proj - psi).norm() < 1e-10);  // members live in the carrier
      Vec pp = kron(psi, psi);
      CHECK((pp.adjoint() * a * pp).real()(0) < 1e-11);
      CHECK(pure_invariant(spec, psi) < 1e-11);
    }
  }
}

TEST_CASE("generic carrier states have strictly positive invariant") {
  auto rng = make_rng(43);
  // Classes where the carrier strictly exceeds the member set. For
  // ferm(3,2), and for Gaussian with d <= 3 modes, every carrier state is a
  // member, so those are checked the other way round.
  for (const auto& spec :
       {ClassSpec(DistSpec{{2, 3}}), ClassSpec(BosSpec{2, 2}),
        ClassSpec(FermSpec{4, 2}), ClassSpec(GaussSpec{4, Sector::Plus}),
        ClassSpec(GaussSpec{4, Sector::Minus})}) {
    CAPTURE(class_name(spec));
    Vec psi = random_carrier_state(spec, rng);
    CHECK(pure_invariant(spec, psi) > 1e-3);
  }
  // Saturated classes: the invariant vanishes on the whole carrier.
  for (const auto& spec :
       {ClassSpec(FermSpec{3, 2}), ClassSpec(GaussSpec{2, Sector::Plus}),
        ClassSpec(GaussSpec{3, Sector::Minus})}) {
    CAPTURE(class_name(spec));
    Vec psi = random_carrier_state(spec, rng);
    CHECK(pure_invariant(spec, psi) < 1e-11);
  }
}

TEST_CASE("pure_invariant validates its input") {
  ClassSpec spec = FermSpec{3, 2};
  auto rng = make_rng(7);
  Vec psi = random_member(spec, rng);
  CHECK_THROWS(pure_invariant(spec, Vec(2.0 * psi)));          // not normalized
  CHECK_THROWS(pure_invariant(spec, haar_state(9, rng)));      // not in carrier
  CHECK_THROWS(pure_invariant(spec, haar_state(4, rng)));      // wrong dim
}

TEST_CASE("purity-sum evaluation agrees with the dense projector") {
  auto rng = make_rng(44);
  for (const auto& spec : {ClassSpec(DistSpec{{2, 3}}), ClassSpec(BosSpec{2, 2}),
                           ClassSpec(BosSpec{3, 2}), ClassSpec(FermSpec{3, 2}),
                           ClassSpec(FermSpec{4, 2})}) {
    CAPTURE(class_name(spec));
    for (int rep = 0; rep < 3; ++rep) {
      Vec psi = random_carrier_state(spec, rng);
      CHECK(pure_invariant(spec, psi) ==
            doctest::Approx(pure_invariant_physical(spec, psi)).epsilon(1e-9));
    }
  }
  CHECK_THROWS(pure_invariant_physical(GaussSpec{2}, Vec::Unit(4, 0)));
}

TEST_CASE("compressed two-copy operators reproduce the ambient ones") {
  auto rng = make_rng(45);
  for (const auto& spec : kSmallSpecs) {
    CAPTURE(class_name(spec));
    auto c = compressed_two_copy(spec);
    CHECK(c.n == carrier_dim(spec));
    CHECK(frob_dist(c.proj * c.proj, c.proj) < 1e-11);
    CHECK(frob_dist(c.a, c.psym - c.proj) < 1e-13);
    Mat j = carrier_isometry(spec);
    CHECK(frob_dist(j.adjoint() * j, Mat::Identity(c.n, c.n)) < 1e-12);
    Vec phi = haar_state(c.n, rng);
    Vec pp = kron(phi, phi);
    double compressed = (pp.adjoint() * c.a * pp).real()(0);
    Vec psi = j * phi;
    CHECK(compressed == doctest::Approx(pure_invariant(spec, psi)).epsilon(1e-9));
  }
}

TEST_CASE("k-copy projectors: idempotence, traces and hook-rule ranks") {
  // Distinguishable 2 x 2, three copies.
  {
    ClassSpec s = DistSpec{{2, 2}};
    Mat p = class_projector_k(s, 3);
    CHECK(frob_dist(p * p, p) < 1e-11);
    CHECK(p.trace().real() == doctest::Approx(16.0).epsilon(1e-12));  // C(4,3)^2
    CHECK(class_projector_k_trace(s, 3) == BigRat(16));
    CHECK(class_rank_prediction(s, 3) == 16);
  }
  // Bosonic d = 2, L = 2, three copies: Sym^6 C^2.
  {
    ClassSpec s = BosSpec{2, 2};
    Mat p = class_projector_k(s, 3);
    CHECK(frob_dist(p * p, p) < 1e-11);
    CHECK(p.trace().real() == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(class_projector_k_trace(s, 3) == BigRat(7));
    CHECK(class_rank_prediction(s, 3) == 7);
  }
  // Fermionic L = 2, three copies, with alpha_3 = alpha((3,3)) = 2.
  CHECK(alpha_coeff(Partition(2, 3)) == BigRat(2));
  for (int d : {2, 3}) {
    ClassSpec s = FermSpec{d, 2};
    Mat p = class_projector_k(s, 3);
    CAPTURE(d);
    CHECK(frob_dist(p, p.adjoint()) < 1e-12);
    CHECK(frob_dist(p * p, p) < 1e-11);
    BigInt expect = dim_irrep({3, 3}, d);
    CHECK(p.trace().real() ==
          doctest::Approx(to_double(BigRat(expect, 1))).epsilon(1e-11));
    CHECK(class_projector_k_trace(s, 3) == BigRat(expect, 1));
  }
  CHECK_THROWS(class_projector_k(GaussSpec{2}, 3));
}

TEST_CASE("matrix-free application matches the dense k-copy projector") {
  auto rng = make_rng(46);
  for (const auto& spec : {ClassSpec(DistSpec{{2, 2}}), ClassSpec(BosSpec{2, 2}),
                           ClassSpec(FermSpec{3, 2})}) {
    CAPTURE(class_name(spec));
    Mat p = class_projector_k(spec, 3);
    Vec v = haar_state(static_cast<int>(p.rows()), rng);
    Vec dense = p * v;
    Vec free = apply_class_projector_k(spec, 3, v);
    CHECK((dense - free).norm() < 1e-11);
  }
}

TEST_CASE("fermionic d = 5 triple-copy projector, beyond dense reach") {
  ClassSpec s = FermSpec{5, 2};
  // Exact permutation-cycle trace agrees with the hook rule: dim (3,3) of
  // GL(5) is 175.
  CHECK(class_projector_k_trace(s, 3) == BigRat(175));
  CHECK(class_rank_prediction(s, 3) == 175);
  CHECK_THROWS(class_projector_k(s, 3));  // 15625 is past the dense threshold

  auto rng = make_rng(47);
  Vec v = haar_state(15625, rng);
  Vec pv = apply_class_projector_k(s, 3, v);
  Vec ppv = apply_class_projector_k(s, 3, pv);
  CHECK((ppv - pv).norm() < 1e-10);

  Vec m = random_member(s, rng);
  Vec m3 = kron(m, kron(m, m));
  CHECK((apply_class_projector_k(s, 3, m3) - m3).norm() < 1e-10);
}

TEST_CASE("Gaussian P0 equals the numeric kernel projector of Lambda") {
  for (int d : {2, 3}) {
    Mat p0 = gaussian_p0(d);
    CAPTURE(d);
    CHECK(frob_dist(p0, p0.adjoint()) < 1e-11);
    CHECK(frob_dist(p0 * p0, p0) < 1e-10);
    CHECK(p0.trace().real() ==
          doctest::Approx(to_double(BigRat(binomial(2 * d, d), 1))).epsilon(1e-11));
    CHECK(frob_dist(p0, gaussian_null_oracle(d)) < 1e-9);
    // P0 projects onto ker(Lambda).
    Mat lam = gaussian_lambda(d);
    CHECK((lam * p0).norm() < 1e-9);
  }
}

TEST_CASE("carrier isometries and dimensions") {
  CHECK(carrier_dim(DistSpec{{2, 3}}) == 6);
  CHECK(carrier_dim(BosSpec{3, 2}) == 6);
  CHECK(carrier_dim(FermSpec{4, 2}) == 6);
  CHECK(carrier_dim(GaussSpec{3}) == 4);
  for (const auto& spec : kSmallSpecs) {
    Mat j = carrier_isometry(spec);
    Mat pc = carrier_projector(spec);
    CHECK(frob_dist(j * j.adjoint(), pc) < 1e-11);
  }
  CHECK_THROWS(carrier_dim(FermSpec{2, 3}));  // L > d
}

TEST_CASE("Schmidt decomposition and reconstruction") {
  auto rng = make_rng(48);
  Vec psi = haar_state(12, rng);
  auto dec = schmidt_decompose(psi, 3, 4);
  // Coefficients non-increasing, squares sum to one.
  double sum = 0.0;
  for (int i = 0; i < dec.coeffs.size(); ++i) {
    sum += dec.coeffs[i] * dec.coeffs[i];
    if (i > 0) CHECK(dec.coeffs[i] <= dec.coeffs[i - 1] + 1e-14);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  Vec rebuilt = Vec::Zero(12);
  for (int i = 0; i < dec.coeffs.size(); ++i)
    rebuilt += dec.coeffs[i] * kron(Vec(dec.left.col(i)), Vec(dec.right.col(i)));
  CHECK((rebuilt - psi).norm() < 1e-12);
}

TEST_CASE("Schmidt-rank operators detect rank > n + 1") {
  // A_n is a projector (product of commuting antisymmetrizers).
  Mat a1 = schmidt_operator(1, 2, 2);
  CHECK(frob_dist(a1, a1.adjoint()) < 1e-12);
  CHECK(frob_dist(a1 * a1, a1) < 1e-11);

  // Bell state: lambda^2 = (1/2, 1/2), so <psi^2|A_1|psi^2> = 1/4.
  Vec bell = Vec::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  Vec b2 = kron(bell, bell);
  CHECK((b2.adjoint() * a1 * b2).real()(0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(schmidt_pure_invariant(bell, 2, 2, 1) ==
        doctest::Approx(0.25).epsilon(1e-12));

  // Product states are annihilated for every n >= 1.
  auto rng = make_rng(49);
  Vec prod = kron(haar_state(2, rng), haar_state(3, rng));
  CHECK(schmidt_pure_invariant(prod, 2, 3, 1) < 1e-13);
  Mat a1b = schmidt_operator(1, 2, 3);
  Vec p2 = kron(prod, prod);
  CHECK((p2.adjoint() * a1b * p2).norm() < 1e-12);

  // Generic bipartite state: operator expectation equals the elementary
  // symmetric polynomial of the squared Schmidt coefficients.
  Vec psi = haar_state(6, rng);
  Vec psi2 = kron(psi, psi);
  CHECK((psi2.adjoint() * a1b * psi2).real()(0) ==
        doctest::Approx(schmidt_pure_invariant(psi, 2, 3, 1)).epsilon(1e-10));

  // n = 2 on 3 x 3: rank-2 states are annihilated, rank-3 states are not.
  Vec r2 = Vec::Zero(9);
  r2[0] = std::sqrt(0.7);
  r2[4] = std::sqrt(0.3);
  CHECK(schmidt_pure_invariant(r2, 3, 3, 2) < 1e-13);
  Vec me3 = Vec::Zero(9);
  me3[0] = me3[4] = me3[8] = 1.0 / std::sqrt(3.0);
  // Maximally entangled: C(d, n+1) / d^{n+1} = C(3,3)/27.
  CHECK(schmidt_pure_invariant(me3, 3, 3, 2) ==
        doctest::Approx(1.0 / 27.0).epsilon(1e-12));
  Mat a2 = schmidt_operator(2, 3, 3);
  Vec m3 = kron(me3, kron(me3, me3));
  CHECK((m3.adjoint() * a2 * m3).real()(0) ==
        doctest::Approx(1.0 / 27.0).epsilon(1e-10));
}

TEST_CASE("GME operator annihilates biseparable states and factorizes") {
  auto rng = make_rng(50);
  // Biseparable pure states across every cut: <psi^6|A_GME|psi^6> = 0.
  for (int cut = 0; cut < 3; ++cut) {
    Vec psi = random_biseparable(2, cut, rng);
    CHECK(std::abs(gme_expect(2, psi)) < 1e-10);
    CHECK(gme_product_form(2, psi) < 1e-12);
  }
  // GHZ is genuinely multiparty entangled: all marginals are I/2, so the
  // product form gives (1/4)^3.
  Vec ghz = ghz_state(2);
  CHECK(gme_product_form(2, ghz) == doctest::Approx(1.0 / 64.0).epsilon(1e-12));
  CHECK(gme_expect(2, ghz) == doctest::Approx(1.0 / 64.0).epsilon(1e-9));
  // Factorization on generic random states.
  for (int rep = 0; rep < 5; ++rep) {
    Vec psi = haar_state(8, rng);
    CHECK(gme_expect(2, psi) ==
          doctest::Approx(gme_product_form(2, psi)).epsilon(1e-9));
  }
}

TEST_CASE("GME middle operator and symmetrizer fit together") {
  auto rng = make_rng(51);
  // psi^(x)6 is permutation symmetric, so the outer symmetrizers act as the
  // identity: the full A_GME path must agree with the middle-only path.
  Vec psi = haar_state(8, rng);
  Vec w = gme_six_copies(2, psi);
  CHECK((gme_symmetrize6(2, w) - w).norm() < 1e-11);
  Vec full = gme_apply(2, w);
  Vec mid = gme_apply_middle(2, w);
  CHECK((full - gme_symmetrize6(2, mid)).norm() < 1e-11);
  CHECK((w.adjoint() * full).real()(0) ==
        doctest::Approx((w.adjoint() * mid).real()(0)).epsilon(1e-10));
  // The symmetrizer is an idempotent on random (non-symmetric) input.
  Vec v = haar_state(static_cast<int>(w.size()), rng);
  Vec sv = gme_symmetrize6(2, v);
  CHECK((gme_symmetrize6(2, sv) - sv).norm() < 1e-10);
  // A_GME is PSD on random vectors: <v|A|v> = <Mv'|v'> with v' symmetric.
  CHECK((v.adjoint() * gme_apply(2, v)).real()(0) > -1e-11);
  // d = 3 vectors are rejected (memory), while the product form still works.
  CHECK_THROWS(gme_apply_middle(3, Vec::Zero(10)));
  Vec psi3 = haar_state(27, rng);
  CHECK(gme_product_form(3, psi3) > 0.0);
  CHECK(gme_product_form(3, random_biseparable(3, 1, rng)) < 1e-12);
}
