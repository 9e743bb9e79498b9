#include "qcorr/gme.hpp"

#include <algorithm>
#include <numeric>

#include "qcorr/haar.hpp"
#include "qcorr/symmetrizer.hpp"

namespace qcorr {

namespace {

constexpr int kCopies = 6;
constexpr int kSlots = 18;

std::vector<int> slot_dims(int d) {
  if (d != 2)
    throw std::invalid_argument(
        "GME vector path supports d = 2 only (d^18 exceeds memory)");
  return std::vector<int>(kSlots, d);
}

// The 64 signed slot permutations of M = prod_cut (1/4)(I - S_site)(I - S_blk),
// expanded. Returns pairs (sigma, sign); the average carries the 1/64.
struct SignedPerm {
  std::vector<int> sigma;
  double sign;
};

const std::vector<SignedPerm>& middle_terms() {
  static const std::vector<SignedPerm> terms = [] {
    std::vector<SignedPerm> out;
    for (unsigned mask = 0; mask < 64; ++mask) {
      SignedPerm t;
      t.sigma.resize(kSlots);
      std::iota(t.sigma.begin(), t.sigma.end(), 0);
      t.sign = 1.0;
      for (int cut = 0; cut < 3; ++cut) {
        const int a = 2 * cut, b = 2 * cut + 1;  // the two copies of this cut
        if (mask & (1u << (2 * cut))) {          // swap the singled-out site
          std::swap(t.sigma[3 * a + cut], t.sigma[3 * b + cut]);
          t.sign = -t.sign;
        }
        if (mask & (1u << (2 * cut + 1))) {      // swap the two-site block
          for (int s = 0; s < 3; ++s)
            if (s != cut) std::swap(t.sigma[3 * a + s], t.sigma[3 * b + s]);
          t.sign = -t.sign;
        }
      }
      out.push_back(std::move(t));
    }
    return out;
  }();
  return terms;
}

const std::vector<std::vector<int>>& copy_permutations() {
  static const std::vector<std::vector<int>> perms = [] {
    std::vector<std::vector<int>> out;
    std::vector<int> p(kCopies);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<int> sigma(kSlots);
      for (int j = 0; j < kCopies; ++j)
        for (int s = 0; s < 3; ++s) sigma[3 * j + s] = 3 * p[j] + s;
      out.push_back(std::move(sigma));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

}  // namespace

Vec gme_apply_middle(int d, const Vec& v) {
  const auto dims = slot_dims(d);
  if (v.size() != product_of(dims))
    throw std::invalid_argument("vector dimension mismatch");
  Vec acc = Vec::Zero(v.size());
  for (const auto& t : middle_terms())
    acc += t.sign * apply_factor_permutation(v, dims, t.sigma);
  return acc / 64.0;
}

Vec gme_symmetrize6(int d, const Vec& v) {
  const auto dims = slot_dims(d);
  if (v.size() != product_of(dims))
    throw std::invalid_argument("vector dimension mismatch");
  Vec acc = Vec::Zero(v.size());
  for (const auto& sigma : copy_permutations())
    acc += apply_factor_permutation(v, dims, sigma);
  return acc / 720.0;
}

Vec gme_apply(int d, const Vec& v) {
  return gme_symmetrize6(d, gme_apply_middle(d, gme_symmetrize6(d, v)));
}

Vec gme_six_copies(int d, const Vec& psi) {
  if (psi.size() != d * d * d)
    throw std::invalid_argument("tripartite state dimension mismatch");
  Vec w = psi;
  for (int j = 1; j < kCopies; ++j) w = kron(w, psi);
  return w;
}

double gme_expect(int d, const Vec& psi) {
  Vec w = gme_six_copies(d, psi);
  return (w.adjoint() * gme_apply_middle(d, w)).real()(0);
}

double gme_product_form(int d, const Vec& psi) {
  if (psi.size() != d * d * d)
    throw std::invalid_argument("tripartite state dimension mismatch");
  DenseOperator rho(psi * psi.adjoint(), {d, d, d});
  double prod = 1.0;
  for (int site = 0; site < 3; ++site) {
    double purity = partial_trace(rho, {site}).m.squaredNorm();
    prod *= (1.0 - purity) / 2.0;
  }
  return prod;
}

double gme_witness_value(int d, const std::vector<Vec>& psis) {
  if (psis.size() != kCopies)
    throw std::invalid_argument("need exactly six tripartite states");
  Vec w = psis[0];
  for (int j = 1; j < kCopies; ++j) w = kron(w, psis[j]);
  // One symmetrization serves both terms: <w|P M P|w> = <u|M|u> and
  // <w|P|w> = <w|u> for u = P w (P is a projector).
  Vec u = gme_symmetrize6(d, w);
  double a = (u.adjoint() * gme_apply_middle(d, u)).real()(0);
  double sym = (w.adjoint() * u).real()(0);
  return a - 5.0 * (1.0 - sym);
}

Vec ghz_state(int d) {
  const int n = d * d * d;
  Vec v = Vec::Zero(n);
  for (int i = 0; i < d; ++i) v[i * d * d + i * d + i] = 1.0 / std::sqrt(d);
  return v;
}

Vec random_biseparable(int d, int cut, std::mt19937_64& rng) {
  if (cut < 0 || cut > 2) throw std::invalid_argument("cut must be 0, 1 or 2");
  Vec single = haar_state(d, rng);
  Vec pair = haar_state(d * d, rng);
  Vec v = kron(single, pair);  // slot order: cut site, then the other two
  std::vector<int> others;
  for (int s = 0; s < 3; ++s)
    if (s != cut) others.push_back(s);
  std::vector<int> sigma(3);
  sigma[cut] = 0;
  sigma[others[0]] = 1;
  sigma[others[1]] = 2;
  return apply_factor_permutation(v, {d, d, d}, sigma);
}

}  // namespace qcorr
