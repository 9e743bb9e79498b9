#include "qcorr/classes.hpp"

#include <algorithm>
#include <numeric>

#include "qcorr/haar.hpp"

namespace qcorr {

namespace {

int spec_L(const ClassSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>)
          return static_cast<int>(s.dims.size());
        else if constexpr (std::is_same_v<T, GaussSpec>)
          return 1;
        else
          return s.L;
      },
      spec);
}

void check_spec(const ClassSpec& spec) {
  if (const auto* f = std::get_if<FermSpec>(&spec)) {
    if (f->L > f->d)
      throw std::invalid_argument("fermionic class requires L <= d");
  }
  if (const auto* b = std::get_if<BosSpec>(&spec)) {
    if (b->L < 1 || b->d < 1) throw std::invalid_argument("bad bosonic spec");
  }
  if (const auto* g = std::get_if<GaussSpec>(&spec)) {
    if (g->d < 1 || g->d > 12) throw std::invalid_argument("bad Gaussian spec");
  }
}

// Slot indices of site i across all k copies (copy-major layout).
std::vector<int> copy_slots(int L, int k, int site) {
  std::vector<int> slots(k);
  for (int j = 0; j < k; ++j) slots[j] = j * L + site;
  return slots;
}

std::vector<int> site_slots(int L, int copy) {
  std::vector<int> slots(L);
  for (int i = 0; i < L; ++i) slots[i] = copy * L + i;
  return slots;
}

std::vector<int> k_copy_dims(const ClassSpec& spec, int k) {
  std::vector<int> dims;
  const auto single = ambient_factor_dims(spec);
  for (int j = 0; j < k; ++j) dims.insert(dims.end(), single.begin(), single.end());
  return dims;
}

// Apply the (anti)symmetrizer over `slots` to a vector, matrix-free.
Vec apply_slot_symmetrizer(const Vec& v, const std::vector<int>& dims,
                           std::vector<int> slots, bool antisymmetric) {
  std::sort(slots.begin(), slots.end());
  Vec acc = Vec::Zero(v.size());
  std::vector<int> perm = slots;
  long long count = 0;
  do {
    std::vector<int> sigma(dims.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    for (size_t i = 0; i < slots.size(); ++i) sigma[slots[i]] = perm[i];
    double coeff = 1.0;
    if (antisymmetric) {
      std::vector<int> rel(slots.size());
      for (size_t i = 0; i < slots.size(); ++i)
        rel[i] = static_cast<int>(
            std::lower_bound(slots.begin(), slots.end(), perm[i]) - slots.begin());
      coeff = permutation_sign(rel);
    }
    acc += coeff * apply_factor_permutation(v, dims, sigma);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / static_cast<double>(count);
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::string class_name(const ClassSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          std::string name = "dist(";
          for (size_t i = 0; i < s.dims.size(); ++i)
            name += (i ? "x" : "") + std::to_string(s.dims[i]);
          return name + ")";
        } else if constexpr (std::is_same_v<T, BosSpec>)
          return "bos(d=" + std::to_string(s.d) + ",L=" + std::to_string(s.L) + ")";
        else if constexpr (std::is_same_v<T, FermSpec>)
          return "ferm(d=" + std::to_string(s.d) + ",L=" + std::to_string(s.L) + ")";
        else
          return "gauss(d=" + std::to_string(s.d) +
                 (s.sector == Sector::Plus ? ",+)" : ",-)");
      },
      spec);
}

std::vector<int> ambient_factor_dims(const ClassSpec& spec) {
  check_spec(spec);
  return std::visit(
      [](const auto& s) -> std::vector<int> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>)
          return s.dims;
        else if constexpr (std::is_same_v<T, GaussSpec>)
          return {1 << s.d};
        else
          return std::vector<int>(s.L, s.d);
      },
      spec);
}

int ambient_dim(const ClassSpec& spec) { return product_of(ambient_factor_dims(spec)); }

int carrier_dim(const ClassSpec& spec) {
  check_spec(spec);
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>)
          return product_of(s.dims);
        else if constexpr (std::is_same_v<T, BosSpec>)
          return static_cast<int>(binomial(s.d + s.L - 1, s.L));
        else if constexpr (std::is_same_v<T, FermSpec>)
          return static_cast<int>(binomial(s.d, s.L));
        else
          return 1 << (s.d - 1);
      },
      spec);
}

Mat carrier_projector(const ClassSpec& spec) {
  const auto dims = ambient_factor_dims(spec);
  const int n = product_of(dims);
  return std::visit(
      [&](const auto& s) -> Mat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>)
          return Mat::Identity(n, n);
        else if constexpr (std::is_same_v<T, BosSpec>) {
          std::vector<int> all(s.L);
          std::iota(all.begin(), all.end(), 0);
          return symmetrizer(dims, all, false);
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          std::vector<int> all(s.L);
          std::iota(all.begin(), all.end(), 0);
          return symmetrizer(dims, all, true);
        } else {
          Mat p = Mat::Zero(n, n);
          const int want = (s.sector == Sector::Plus) ? 0 : 1;
          for (int idx = 0; idx < n; ++idx)
            if (__builtin_popcount(static_cast<unsigned>(idx)) % 2 == want)
              p(idx, idx) = 1.0;
          return p;
        }
      },
      spec);
}

Mat carrier_isometry(const ClassSpec& spec) {
  const int n = ambient_dim(spec);
  const int nc = carrier_dim(spec);
  if (std::holds_alternative<DistSpec>(spec)) return Mat::Identity(n, n);
  if (const auto* g = std::get_if<GaussSpec>(&spec)) {
    Mat j = Mat::Zero(n, nc);
    const int want = (g->sector == Sector::Plus) ? 0 : 1;
    int col = 0;
    for (int idx = 0; idx < n; ++idx)
      if (__builtin_popcount(static_cast<unsigned>(idx)) % 2 == want)
        j(idx, col++) = 1.0;
    return j;
  }
  auto eig = herm_eig(carrier_projector(spec));
  for (int i = 0; i < nc; ++i)
    if (eig.values[i] < 0.5)
      throw std::runtime_error("carrier projector rank below expected dimension");
  return eig.vectors.leftCols(nc);
}

Mat class_projector2(const ClassSpec& spec) {
  const auto dims2 = k_copy_dims(spec, 2);
  const int L = spec_L(spec);
  return std::visit(
      [&](const auto& s) -> Mat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          const int n2 = product_of(dims2);
          Mat p = Mat::Identity(n2, n2);
          for (int i = 0; i < L; ++i) p = p * pair_symmetrizer(dims2, i, L + i);
          return p;
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          std::vector<int> all(2 * L);
          std::iota(all.begin(), all.end(), 0);
          return symmetrizer(dims2, all, false);
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          const int n2 = product_of(dims2);
          Mat pc = kron(carrier_projector(spec), carrier_projector(spec));
          Mat pairs = Mat::Identity(n2, n2);
          for (int i = 0; i < L; ++i) pairs = pairs * pair_symmetrizer(dims2, i, L + i);
          const double alpha = to_double(alpha_coeff(Partition(s.L, 2)));
          return alpha * pc * pairs * pc;
        } else {
          Mat pc = kron(carrier_projector(spec), carrier_projector(spec));
          return pc * gaussian_p0(s.d) * pc;
        }
      },
      spec);
}

Mat sym2(const ClassSpec& spec) {
  const auto dims2 = k_copy_dims(spec, 2);
  const int L = spec_L(spec);
  const int n2 = product_of(dims2);
  std::vector<int> block_a(L), block_b(L);
  std::iota(block_a.begin(), block_a.end(), 0);
  std::iota(block_b.begin(), block_b.end(), L);
  Mat swap = block_swap(dims2, block_a, block_b);
  Mat half = (Mat::Identity(n2, n2) + swap) / 2.0;
  if (std::holds_alternative<DistSpec>(spec)) return half;
  Mat pc = kron(carrier_projector(spec), carrier_projector(spec));
  return pc * half * pc;
}

Mat class_operator2(const ClassSpec& spec) { return sym2(spec) - class_projector2(spec); }

CompressedTwoCopy compressed_two_copy(const ClassSpec& spec) {
  Mat j = carrier_isometry(spec);
  Mat j2 = kron(j, j);
  CompressedTwoCopy out;
  out.n = carrier_dim(spec);
  out.proj = j2.adjoint() * class_projector2(spec) * j2;
  out.psym = pair_symmetrizer({out.n, out.n}, 0, 1);
  out.pasym = Mat::Identity(out.n * out.n, out.n * out.n) - out.psym;
  out.a = out.psym - out.proj;
  return out;
}

double pure_invariant_with(const Mat& proj2, const Vec& psi) {
  Vec pp = kron(psi, psi);
  return 1.0 - (pp.adjoint() * proj2 * pp).real()(0);
}

double pure_invariant(const ClassSpec& spec, const Vec& psi) {
  if (psi.size() != ambient_dim(spec))
    throw std::invalid_argument("state dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("state not normalized");
  Vec proj = carrier_projector(spec) * psi;
  if ((proj - psi).norm() > 1e-8)
    throw std::invalid_argument("state not in the carrier space of the class");
  return pure_invariant_with(class_projector2(spec), psi);
}

double pure_invariant_physical(const ClassSpec& spec, const Vec& psi) {
  const auto dims = ambient_factor_dims(spec);
  const int L = spec_L(spec);
  DenseOperator rho(psi * psi.adjoint(), dims);
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussSpec>) {
          throw std::invalid_argument(
              "no purity-sum form for the Gaussian class");
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          // <psi psi|P^{sym,2L}|psi psi> = sum_k C(L,k)^2 tr(rho_(k)^2) / C(2L,L)
          // for a symmetric state (any k-site subset gives the same marginal).
          double acc = 0.0;
          for (int k = 0; k <= L; ++k) {
            double purity = 1.0;
            if (k > 0) {
              std::vector<int> keep(k);
              std::iota(keep.begin(), keep.end(), 0);
              purity = partial_trace(rho, keep).m.squaredNorm();
            }
            acc += to_double(BigRat(binomial(L, k) * binomial(L, k), 1)) * purity;
          }
          return 1.0 - acc / to_double(BigRat(binomial(2 * L, L), 1));
        } else {
          // <psi psi|prod_i P+_{ii'}|psi psi> = 2^{-L} sum_{X subset sites}
          // tr(rho_X^2); the fermionic projector adds the factor alpha.
          double acc = 0.0;
          for (unsigned mask = 0; mask < (1u << L); ++mask) {
            if (mask == 0) {
              acc += 1.0;
              continue;
            }
            std::vector<int> keep;
            for (int i = 0; i < L; ++i)
              if (mask & (1u << i)) keep.push_back(i);
            acc += partial_trace(rho, keep).m.squaredNorm();
          }
          double alpha = 1.0;
          if constexpr (std::is_same_v<T, FermSpec>)
            alpha = to_double(alpha_coeff(Partition(s.L, 2)));
          return 1.0 - alpha * acc / std::pow(2.0, L);
        }
      },
      spec);
}

Mat class_projector_k(const ClassSpec& spec, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (k == 2) return class_projector2(spec);
  const auto dims = k_copy_dims(spec, k);
  const int n = product_of(dims);
  if (n > kDenseThreshold)
    throw std::invalid_argument("k-copy projector too large to materialize");
  const int L = spec_L(spec);
  return std::visit(
      [&](const auto& s) -> Mat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          Mat p = Mat::Identity(n, n);
          for (int i = 0; i < L; ++i)
            p = p * symmetrizer(dims, copy_slots(L, k, i), false);
          return p;
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          std::vector<int> all(k * L);
          std::iota(all.begin(), all.end(), 0);
          return symmetrizer(dims, all, false);
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          Mat pa = Mat::Identity(n, n);
          for (int j = 0; j < k; ++j)
            pa = pa * symmetrizer(dims, site_slots(L, j), true);
          Mat sym = Mat::Identity(n, n);
          for (int i = 0; i < L; ++i)
            sym = sym * symmetrizer(dims, copy_slots(L, k, i), false);
          const double alpha = to_double(alpha_coeff(Partition(s.L, k)));
          return alpha * pa * sym * pa;
        } else {
          throw std::invalid_argument("Gaussian class supports k = 2 only");
        }
      },
      spec);
}

Vec apply_class_projector_k(const ClassSpec& spec, int k, const Vec& v) {
  const auto dims = k_copy_dims(spec, k);
  if (v.size() != product_of(dims))
    throw std::invalid_argument("vector dimension mismatch");
  const int L = spec_L(spec);
  return std::visit(
      [&](const auto& s) -> Vec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          Vec out = v;
          for (int i = 0; i < L; ++i)
            out = apply_slot_symmetrizer(out, dims, copy_slots(L, k, i), false);
          return out;
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          std::vector<int> all(k * L);
          std::iota(all.begin(), all.end(), 0);
          return apply_slot_symmetrizer(v, dims, all, false);
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          auto antisym_all = [&](Vec x) {
            for (int j = 0; j < k; ++j)
              x = apply_slot_symmetrizer(x, dims, site_slots(L, j), true);
            return x;
          };
          Vec out = antisym_all(v);
          for (int i = 0; i < L; ++i)
            out = apply_slot_symmetrizer(out, dims, copy_slots(L, k, i), false);
          out = antisym_all(out);
          return to_double(alpha_coeff(Partition(s.L, k))) * out;
        } else {
          throw std::invalid_argument("Gaussian class has no matrix-free path");
        }
      },
      spec);
}

BigRat class_projector_k_trace(const ClassSpec& spec, int k) {
  const int L = spec_L(spec);
  return std::visit(
      [&](const auto& s) -> BigRat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          BigInt p = 1;
          for (int d : s.dims) p *= binomial(d + k - 1, k);
          return BigRat(p, 1);
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          return BigRat(binomial(s.d + k * L - 1, k * L), 1);
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          // tr(alpha Pa S Pa) = alpha tr(S Pa): expand both projector products
          // into permutations of the kL slots and count cycles; each
          // permutation contributes sign * d^{#cycles}.
          const auto perms_k = all_permutations(k);
          const auto perms_L = all_permutations(L);
          const int slots = k * L;
          // Enumerate tuples (sigma_1..sigma_L) and (tau_1..tau_k).
          std::vector<int> si(L, 0), ti(k, 0);
          BigInt acc = 0;
          bool more = true;
          while (more) {
            // tau part first (per-copy antisymmetrizers), then sigma part.
            int sign = 1;
            for (int j = 0; j < k; ++j) {
              std::vector<int> t = perms_L[ti[j]];
              sign *= permutation_sign(t);
            }
            std::vector<int> pi(slots);
            for (int j = 0; j < k; ++j)
              for (int i = 0; i < L; ++i) {
                int mid = j * L + perms_L[ti[j]][i];  // tau_j on sites
                int site = mid % L, copy = mid / L;
                pi[j * L + i] = perms_k[si[site]][copy] * L + site;  // sigma on copies
              }
            // count cycles of pi
            std::vector<bool> seen(slots, false);
            int cycles = 0;
            for (int t0 = 0; t0 < slots; ++t0) {
              if (seen[t0]) continue;
              ++cycles;
              int t = t0;
              while (!seen[t]) {
                seen[t] = true;
                t = pi[t];
              }
            }
            BigInt term = 1;
            for (int c = 0; c < cycles; ++c) term *= s.d;
            acc += sign * term;
            // advance mixed-radix counter (si over k!^L, ti over L!^k)
            more = false;
            for (int i = 0; i < L; ++i) {
              if (++si[i] < static_cast<int>(perms_k.size())) {
                more = true;
                break;
              }
              si[i] = 0;
            }
            if (!more)
              for (int j = 0; j < k; ++j) {
                if (++ti[j] < static_cast<int>(perms_L.size())) {
                  more = true;
                  // reset sigma counter already zeroed
                  break;
                }
                ti[j] = 0;
              }
          }
          BigInt denom = 1;
          for (int i = 0; i < L; ++i) denom *= factorial(k);
          for (int j = 0; j < k; ++j) denom *= factorial(L);
          return alpha_coeff(Partition(s.L, k)) * BigRat(acc, denom);
        } else {
          if (k != 2)
            throw std::invalid_argument("Gaussian class supports k = 2 only");
          // Each parity sector carries half of tr P0 = C(2d, d).
          return BigRat(binomial(2 * s.d, s.d), 2);
        }
      },
      spec);
}

BigInt class_rank_prediction(const ClassSpec& spec, int k) {
  return std::visit(
      [&](const auto& s) -> BigInt {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          BigInt p = 1;
          for (int d : s.dims) p *= dim_irrep({k}, d);
          return p;
        } else if constexpr (std::is_same_v<T, BosSpec>)
          return dim_irrep({k * s.L}, s.d);
        else if constexpr (std::is_same_v<T, FermSpec>)
          return dim_irrep(Partition(s.L, k), s.d);
        else
          throw std::invalid_argument("no hook-rule prediction for Gaussian");
      },
      spec);
}

Vec random_member(const ClassSpec& spec, std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& s) -> Vec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DistSpec>) {
          Vec v = haar_state(s.dims[0], rng);
          for (size_t i = 1; i < s.dims.size(); ++i)
            v = kron(v, haar_state(s.dims[i], rng));
          return v;
        } else if constexpr (std::is_same_v<T, BosSpec>) {
          Vec single = haar_state(s.d, rng);
          Vec v = single;
          for (int i = 1; i < s.L; ++i) v = kron(v, single);
          return v;
        } else if constexpr (std::is_same_v<T, FermSpec>) {
          Mat u = haar_unitary(s.d, rng);
          const auto perms = all_permutations(s.L);
          Vec acc = Vec::Zero(product_of(std::vector<int>(s.L, s.d)));
          for (const auto& p : perms) {
            Vec term = u.col(p[0]);
            for (int i = 1; i < s.L; ++i) term = kron(term, Vec(u.col(p[i])));
            acc += static_cast<double>(permutation_sign(p)) * term;
          }
          return acc / std::sqrt(to_double(BigRat(factorial(s.L), 1)));
        } else {
          FockAlgebra f(s.d);
          return f.random_pure_gaussian(rng, s.sector == Sector::Plus ? +1 : -1);
        }
      },
      spec);
}

Vec random_carrier_state(const ClassSpec& spec, std::mt19937_64& rng) {
  return carrier_isometry(spec) * haar_state(carrier_dim(spec), rng);
}

Mat gaussian_lambda(int d) {
  FockAlgebra f(d);
  const int n = f.dim();
  Mat lam = Mat::Zero(n * n, n * n);
  for (int i = 1; i <= 2 * d; ++i) lam += kron(f.c(i), f.c(i));
  return lam;
}

Mat gaussian_p0(int d) {
  FockAlgebra f(d);
  const int n = f.dim();
  const long long big = static_cast<long long>(n) * n;
  Mat p0 = Mat::Zero(big, big);
  // Pre-tabulate the doubled Majoranas.
  std::vector<Mat> cc;
  for (int i = 1; i <= 2 * d; ++i) cc.push_back(kron(f.c(i), f.c(i)));
  for (int kk = 0; kk <= d; ++kk) {
    const double fkd =
        ((kk % 2) ? -1.0 : 1.0) *
        to_double(BigRat(factorial(2 * kk) * factorial(2 * d - 2 * kk),
                         factorial(d) * factorial(kk) * factorial(d - kk)));
    for (unsigned mask = 0; mask < (1u << (2 * d)); ++mask) {
      if (__builtin_popcount(mask) != 2 * kk) continue;
      Mat term = Mat::Identity(big, big);
      for (int i = 0; i < 2 * d; ++i)
        if (mask & (1u << i)) term = term * cc[i];
      p0 += fkd * term;
    }
  }
  return p0 / std::pow(4.0, d);
}

Mat gaussian_null_oracle(int d) {
  Mat lam = gaussian_lambda(d);
  auto eig = herm_eig(lam);
  const int n = static_cast<int>(lam.rows());
  Mat p = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    if (std::abs(eig.values[i]) < 1e-8)
      p += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
  return p;
}

SchmidtResult schmidt_decompose(const Vec& psi, int dA, int dB) {
  if (psi.size() != static_cast<Eigen::Index>(dA) * dB)
    throw std::invalid_argument("dimension mismatch");
  Mat m(dA, dB);
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b) m(a, b) = psi[a * dB + b];
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtResult out;
  out.coeffs = svd.singularValues();
  out.left = svd.matrixU();
  out.right = svd.matrixV().conjugate();
  return out;
}

Mat schmidt_operator(int n, int dA, int dB) {
  const int k = n + 1;
  std::vector<int> dims;
  for (int j = 0; j < k; ++j) {
    dims.push_back(dA);
    dims.push_back(dB);
  }
  std::vector<int> a_slots(k), b_slots(k);
  for (int j = 0; j < k; ++j) {
    a_slots[j] = 2 * j;
    b_slots[j] = 2 * j + 1;
  }
  return symmetrizer(dims, a_slots, true) * symmetrizer(dims, b_slots, true);
}

double schmidt_pure_invariant(const Vec& psi, int dA, int dB, int n) {
  auto dec = schmidt_decompose(psi, dA, dB);
  const int r = static_cast<int>(dec.coeffs.size());
  // Elementary symmetric polynomial e_{n+1} of the squared coefficients.
  std::vector<double> e(n + 2, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < r; ++i) {
    const double x = dec.coeffs[i] * dec.coeffs[i];
    for (int j = std::min(n + 1, i + 1); j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e[n + 1];
}

}  // namespace qcorr
