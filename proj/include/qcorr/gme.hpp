// Genuine multiparty entanglement for three parties: the k = 6 operator
//   A_GME = P^{sym,6} (A^{1:23} (x) A^{2:13} (x) A^{3:12}) P^{sym,6}
// applied matrix-free (18 tensor slots of local dimension d), its pure-state
// factorization into the three bipartite invariants, and the witness
//   V = A_GME - 5 (I - P^{sym,6}).
//
// Copies are blocks of three slots: copy j occupies slots 3j..3j+2. Copies
// (0,1) carry the 1:23 cut, (2,3) the 2:13 cut, (4,5) the 3:12 cut.
#pragma once

#include <random>

#include "qcorr/dense.hpp"

namespace qcorr {

// The middle operator M = A^{1:23} (x) A^{2:13} (x) A^{3:12}: an average of
// 64 signed slot permutations. Defined for any d with dim = d^18 vectors,
// but only d = 2 fits in memory; larger d throws.
Vec gme_apply_middle(int d, const Vec& v);

// Symmetrization over the six copies (720 block permutations).
Vec gme_symmetrize6(int d, const Vec& v);

// Full A_GME = P^{sym,6} M P^{sym,6}.
Vec gme_apply(int d, const Vec& v);

// psi^(x)6 for a tripartite pure state psi (dimension d^3).
Vec gme_six_copies(int d, const Vec& psi);

// <psi^(x)6 | A_GME | psi^(x)6>, evaluated through the 64-term middle
// operator (psi^(x)6 is permutation symmetric, so the outer symmetrizers
// act as the identity).
double gme_expect(int d, const Vec& psi);

// The closed-form factorization prod_cut (1 - tr rho_X^2)/2 from the
// single-site marginals; works for any d.
double gme_product_form(int d, const Vec& psi);

// Witness value <w|V|w> for a product input w = psi_1 (x) ... (x) psi_6 of
// six tripartite pure states, V = A_GME - 5 (I - P^{sym,6}).
double gme_witness_value(int d, const std::vector<Vec>& psis);

// GHZ state (|00..0> + ... + |d-1 .. d-1>)/sqrt(d) on three d-level sites.
Vec ghz_state(int d);

// Random pure state separable across the given cut (0: site 1 vs {2,3},
// 1: site 2 vs {1,3}, 2: site 3 vs {1,2}).
Vec random_biseparable(int d, int cut, std::mt19937_64& rng);

}  // namespace qcorr
