#include "qcorr/typicality.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcorr/haar.hpp"

namespace qcorr {

namespace {

BigInt bigpow(BigInt base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

double binary_entropy(double x) {
  double h = 0;
  if (x > 0) h -= x * std::log(x);
  if (x < 1) h -= (1 - x) * std::log(1 - x);
  return h;
}

int hardware_threads() {
  if (const char* env = std::getenv("QCORR_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

SpectrumProfile make_spectrum(std::vector<double> p) {
  if (p.empty()) throw std::invalid_argument("empty spectrum");
  double sum = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw std::invalid_argument("negative spectrum entry");
    if (i > 0 && p[i] > p[i - 1] + 1e-15)
      throw std::invalid_argument("spectrum must be non-increasing");
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("spectrum must sum to 1");
  return SpectrumProfile{std::move(p)};
}

SpectrumProfile parse_spectrum(const std::string& text, int expected_n) {
  std::vector<double> p;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty spectrum token");
    size_t xpos = tok.find('x');
    int repeat = 1;
    std::string vpart = tok;
    if (xpos != std::string::npos) {
      vpart = tok.substr(0, xpos);
      repeat = std::stoi(tok.substr(xpos + 1));
      if (repeat <= 0) throw std::invalid_argument("invalid repeat count");
    }
    const double v = std::stod(vpart);
    for (int r = 0; r < repeat; ++r) p.push_back(v);
  }
  if (expected_n >= 0 && static_cast<int>(p.size()) != expected_n)
    throw std::invalid_argument("spectrum length does not match the carrier");
  return make_spectrum(std::move(p));
}

ClassParams class_params(const ClassSpec& spec) {
  ClassParams out;
  out.n = carrier_dim(spec);
  out.x = class_x_parameter(spec);
  out.c = bilinear_constant(spec);
  out.alpha = out.x;
  out.beta = -out.c;
  if (out.x == 0 || out.c == 0)
    throw std::invalid_argument(
        "saturated class: the typicality estimate is vacuous (X = 0 or c = 0)");
  return out;
}

BigRat table_x_parameter(const ClassSpec& spec) {
  return std::visit(
      [](const auto& s) -> BigRat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          const int l = static_cast<int>(s.dims.size());
          const int d = s.dims.empty() ? 0 : s.dims[0];
          for (int di : s.dims)
            if (di != d)
              throw std::invalid_argument(
                  "the table row assumes equal local dimensions");
          // X = 1 - 2^{1-L} (d+1)^L / (d^L + 1).
          return 1 - BigRat(2 * bigpow(d + 1, l),
                            bigpow(2, l) * (bigpow(d, l) + 1));
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          const BigInt n = binomial(s.d + s.L - 1, s.L);
          return 1 - BigRat(2 * binomial(s.d + 2 * s.L - 1, 2 * s.L),
                            n * (n + 1));
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          const BigInt n = binomial(s.d, s.L);
          return 1 - BigRat(2 * n, n + 1) *
                         BigRat(s.d + 1, BigInt(s.L + 1) * (s.d + 1 - s.L));
        } else {
          const BigInt half = bigpow(2, s.d - 1);
          return 1 - BigRat(binomial(2 * s.d, s.d), (half + 1) * half);
        }
      },
      spec);
}

BigRat pmax_critical(const ClassParams& params) {
  if (!(params.alpha > 0) || !(params.beta < 0) ||
      params.alpha + params.beta > 0)
    throw std::invalid_argument(
        "typicality hypotheses violated: need alpha > 0, beta < 0, "
        "alpha + beta <= 0");
  return -(params.alpha + params.beta) / (params.alpha - params.beta);
}

BigRat pmax_critical_klinear(const BigRat& x, int k) {
  if (k < 2) throw std::invalid_argument("k-linear witness needs k >= 2");
  if (x < 0 || x > 1)
    throw std::invalid_argument("X must lie in [0, 1] (||A|| <= 1)");
  const BigRat xt = x / (k - 1);
  return (k - 1 - xt) / (k - 1 + x);
}

BigRat schmidt_x(int d, int n) {
  if (n < 1 || n > d - 1)
    throw std::invalid_argument("Schmidt rank bound needs 1 <= n <= d - 1");
  const BigInt b = binomial(d, n + 1);
  return BigRat(b * b, binomial(d * d + n, n + 1));
}

double haar_average_bilinear(const BilinearWitness& w, const Mat& rho1,
                             const Mat& rho2) {
  if (rho1.rows() != rho2.rows())
    throw std::invalid_argument("state dimensions must match");
  const double alpha = to_double(w.alpha), beta = to_double(w.beta);
  const double overlap = (rho1 * rho2).trace().real();
  return (alpha + beta) / 2 + (alpha - beta) / 2 * overlap;
}

double haar_average_klinear(const BigRat& x, int k, const Mat& rho,
                            const Vec& psi) {
  if (k < 2) throw std::invalid_argument("k-linear witness needs k >= 2");
  const double q = (psi.adjoint() * rho * psi).real()(0);
  // tr((rho (x) (psi psi)^(x)(k-1)) P^sym,k) = (1 + (k-1) <psi|rho|psi>)/k:
  // in the permutation expansion of P^sym,k every cycle through the rho slot
  // contributes <psi|rho|psi> and (k-1)! permutations fix that slot.
  const double overlap = (1 + (k - 1) * q) / k;
  return -(k - 1) + ((k - 1) + to_double(x)) * overlap;
}

double lower_bound_bilinear(const SpectrumProfile& spectrum,
                            const ClassParams& params) {
  const double delta = spectrum.p[0] - to_double(pmax_critical(params));
  if (delta <= 0) return 0;
  const double n = to_double(BigRat(params.n, 1));
  const double ab = to_double(params.alpha - params.beta);
  return 1 - std::exp(-n * delta * delta * ab * ab / 256);
}

double lower_bound_klinear(const SpectrumProfile& spectrum, const BigInt& n,
                           int k, const BigRat& x) {
  const double delta =
      spectrum.p[0] - to_double(pmax_critical_klinear(x, k));
  if (delta <= 0) return 0;
  const double ck = std::pow((k - 1.0) / k, 4);
  const double xd = to_double(x);
  return 1 - std::exp(-to_double(BigRat(n, 1)) * delta * delta * ck *
                      (1 + xd) * (1 + xd) / 16);
}

Mat compressed_witness(const ClassSpec& spec) {
  auto ct = compressed_two_copy(spec);
  return ct.a - to_double(bilinear_constant(spec)) * ct.pasym;
}

double mc_function_value(const Mat& v_compressed, const RealVec& spectrum,
                         const Mat& u) {
  const int n = static_cast<int>(u.rows());
  if (v_compressed.rows() != static_cast<long>(n) * n ||
      spectrum.size() != n)
    throw std::invalid_argument("dimension mismatch in mc_function_value");
  Mat r1 = u * spectrum.asDiagonal() * u.adjoint();
  Vec top = u.col(0);
  Mat r2 = top * top.adjoint();
  return kron(r1, r2).cwiseProduct(v_compressed.transpose()).sum().real();
}

EstimatorReport mc_fraction(const SpectrumProfile& spectrum,
                            const ClassSpec& spec, long long samples,
                            std::uint64_t seed, int shards) {
  if (samples < 100) throw std::invalid_argument("need at least 100 samples");
  if (shards < 1) throw std::invalid_argument("need at least one shard");
  auto params = class_params(spec);
  const int n = carrier_dim(spec);
  if (static_cast<int>(spectrum.p.size()) != n)
    throw std::invalid_argument("spectrum length does not match the carrier");
  const Mat v = compressed_witness(spec);
  RealVec p(n);
  for (int i = 0; i < n; ++i) p[i] = spectrum.p[i];

  // Every sample draws from its own stream make_rng(seed, index), so the
  // estimate is a pure function of (seed, samples); shards merely partition
  // the index range into contiguous blocks that run concurrently.
  std::vector<long long> counts(shards, 0);
  std::vector<double> sums(shards, 0);
  std::atomic<int> next_shard{0};
  auto worker = [&]() {
    for (;;) {
      const int s = next_shard.fetch_add(1);
      if (s >= shards) return;
      const long long base = samples / shards;
      const long long rem = samples % shards;
      const long long quota = base + (s < rem ? 1 : 0);
      const long long start = s * base + std::min<long long>(s, rem);
      long long hits = 0;
      double sum = 0;
      for (long long i = 0; i < quota; ++i) {
        auto rng = make_rng(seed, static_cast<std::uint64_t>(start + i));
        Mat u = haar_unitary(n, rng);
        const double f = mc_function_value(v, p, u);
        sum += f;
        if (f > kDetectThreshold) ++hits;
      }
      counts[s] = hits;
      sums[s] = sum;
    }
  };
  const int nthreads = std::min(shards, hardware_threads());
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  long long hits = 0;
  double sum = 0;
  for (int s = 0; s < shards; ++s) {
    hits += counts[s];
    sum += sums[s];
  }

  EstimatorReport rep;
  rep.samples = samples;
  rep.fraction = static_cast<double>(hits) / static_cast<double>(samples);
  // Wilson 95% half-width.
  const double z = 1.959963984540054;
  const double m = static_cast<double>(samples);
  const double ph = rep.fraction;
  const double denom = 1 + z * z / m;
  rep.stderr_half =
      z * std::sqrt(ph * (1 - ph) / m + z * z / (4 * m * m)) / denom;
  rep.mean_f = sum / m;
  rep.analytic_bound = lower_bound_bilinear(spectrum, params);
  rep.p_max_cr = to_double(pmax_critical(params));
  rep.seed = seed;
  rep.shards = shards;
  return rep;
}

AsymptoticsRow asymptotics(const ClassSpec& spec, AsymptoticRegime regime) {
  AsymptoticsRow row;
  row.regime = (regime == AsymptoticRegime::FixedModes)
                   ? "d fixed, L -> infinity"
                   : "L/d = a fixed, d -> infinity";
  auto params = class_params(spec);
  row.n_exact = to_double(BigRat(params.n, 1));
  row.npcr_exact = row.n_exact * to_double(pmax_critical(params));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          const int l = static_cast<int>(s.dims.size());
          const double d = s.dims[0];
          for (int di : s.dims)
            if (di != s.dims[0])
              throw std::invalid_argument(
                  "the asymptotic rows assume equal local dimensions");
          row.n_asympt = std::pow(d, l);
          if (regime == AsymptoticRegime::FixedModes) {
            row.npcr_asympt = std::pow(0.5 + d / 2, l);
          } else {
            const double a = l / d;
            row.npcr_asympt = std::exp(a) * std::pow(d / 2, l);
          }
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          const double d = s.d, l = s.L;
          if (regime == AsymptoticRegime::FixedModes) {
            row.n_asympt =
                std::pow(l, d - 1) / to_double(BigRat(factorial(s.d - 1), 1));
            row.npcr_asympt = std::pow(2.0, l + d) / std::pow(l, d);
          } else {
            const double a = l / d;
            row.n_asympt =
                std::exp(d * (1 + a) * binary_entropy(a / (1 + a)));
            const double fa = std::log(2.0) * a + a * std::log(a) -
                              2 * a * std::log(2 * a) -
                              (1 + a) * std::log(1 + a) +
                              (1 + 2 * a) * std::log(1 + 2 * a);
            row.npcr_asympt =
                std::sqrt((1 + a) / (2 * (1 + 2 * a))) * std::exp(fa * d);
          }
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          if (regime == AsymptoticRegime::FixedModes)
            throw std::invalid_argument(
                "no fixed-d table row for Slater determinants");
          const double a = static_cast<double>(s.L) / s.d;
          // N = C(d, L) ~ exp(d H(L/d)); N p_cr ~ N/d for 2L <= d and
          // N/(a d) for 2L >= d.
          row.n_asympt = std::exp(s.d * binary_entropy(a));
          row.npcr_asympt =
              (a <= 0.5) ? row.n_asympt / s.d : row.n_asympt / (a * s.d);
        } else {
          if (regime == AsymptoticRegime::FixedModes)
            throw std::invalid_argument(
                "no fixed-d table row for Gaussian states");
          row.n_asympt = std::pow(2.0, s.d - 1);
          row.npcr_asympt =
              2 * std::pow(2.0, s.d) / std::sqrt(M_PI * s.d);
        }
      },
      spec);
  return row;
}

}  // namespace qcorr
