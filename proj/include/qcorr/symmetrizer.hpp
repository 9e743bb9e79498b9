// Permutation action on tensor factors, symmetrizers/antisymmetrizers and
// block swaps, both as matrix-free vector transforms and as dense operators.
//
// Semantics of a factor permutation sigma (a bijection on slot indices):
// the permuted vector of a product state puts the slot-sigma[j] content into
// slot j, i.e.  U_sigma (x_0 (x) ... (x) x_{m-1}) = (x)_j x_{sigma[j]}.
#pragma once

#include "qcorr/dense.hpp"

namespace qcorr {

// Apply U_sigma to v (dims = factor dimensions; dims[sigma[j]] must equal
// dims[j] for all j).
Vec apply_factor_permutation(const Vec& v, const std::vector<int>& dims,
                             const std::vector<int>& sigma);

// Dense matrix of U_sigma.
Mat permutation_matrix(const std::vector<int>& dims, const std::vector<int>& sigma);

// Parity (+1/-1) of a permutation given as a slot map.
int permutation_sign(std::vector<int> sigma);

// Projector onto the (anti)symmetric subspace of the factors listed in
// `slots` (all of equal dimension); identity on the remaining factors.
Mat symmetrizer(const std::vector<int>& dims, const std::vector<int>& slots,
                bool antisymmetric);

// Pairwise symmetrizer P+ = (I + S_{ab}) / 2 on factors a, b.
Mat pair_symmetrizer(const std::vector<int>& dims, int a, int b);

// Swap of two equal-shaped blocks of factors (S_{block_a <-> block_b}).
Mat block_swap(const std::vector<int>& dims, const std::vector<int>& block_a,
               const std::vector<int>& block_b);

// Symmetrized power-sum of k (possibly distinct) vectors:
//   Sym(v_1..v_k) = sum_sigma v_sigma(1) (x) ... (x) v_sigma(k),
// computed by subset dynamic programming in O(2^k * dim) rather than O(k!).
// All vectors share the dimension `d`; the result lives in dim d^k.
Vec symmetrized_product_sum(const std::vector<Vec>& vs);

}  // namespace qcorr
