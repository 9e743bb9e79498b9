// Exact rational arithmetic helpers built on boost::multiprecision, plus the
// combinatorial quantities (factorials, binomials) used throughout and exact
// Gauss-Jordan inversion for the cone ray computations.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qcorr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Canonical "num/den" serialization (plain integer when den == 1).
std::string rational_to_string(const BigRat& r);

double to_double(const BigRat& r);

// Exact inverse of a square rational matrix; throws if singular.
std::vector<std::vector<BigRat>> rational_inverse(
    std::vector<std::vector<BigRat>> a);

}  // namespace qcorr
