// Young-diagram combinatorics: hook products, polynomial dimensions of
// GL(n) irreps, and the scaling coefficient attached to a diagram.
#pragma once

#include <vector>

#include "qcorr/rational.hpp"

namespace qcorr {

// A partition lambda_0 >= lambda_1 >= ... > 0 given as row lengths.
using Partition = std::vector<int>;

// Product of hook lengths (arm + leg + 1) over all boxes.
BigInt hook_product(const Partition& lambda);

// Content-based dimension of the GL(n) irrep labelled by lambda:
//   f_lambda(n) / g_lambda,
// where f_lambda(n) fills each box with n, +1 per step right, -1 per step
// down, and g_lambda is the hook product. Zero when lambda has more than n
// rows.
BigInt dim_irrep(const Partition& lambda, int n);

// Coefficient alpha(lambda) = c_lambda * r_lambda / g_lambda with
// c_lambda = prod_rows lambda_i! and r_lambda = prod_cols lambda'_j!.
BigRat alpha_coeff(const Partition& lambda);

// Conjugate (transposed) partition.
Partition conjugate(const Partition& lambda);

}  // namespace qcorr
