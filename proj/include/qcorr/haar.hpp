// Haar-distributed unitaries and random states, with deterministic seeding.
//
// Seeds are expanded with SplitMix64 so that worker shards derived from one
// master seed are statistically independent; the generator itself is the
// standard 64-bit Mersenne twister.
#pragma once

#include <cstdint>
#include <random>

#include "qcorr/dense.hpp"

namespace qcorr {

// SplitMix64 step: mixes `state` in place and returns the next output word.
std::uint64_t splitmix64(std::uint64_t& state);

// mt19937_64 seeded from a SplitMix64 expansion of (seed, stream).
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// Haar-distributed U(n) matrix: complex Ginibre followed by QR with the
// R-diagonal phase fix.
Mat haar_unitary(int n, std::mt19937_64& rng);

// Uniformly random unit vector in C^n.
Vec haar_state(int n, std::mt19937_64& rng);

// Standard complex Gaussian matrix (independent N(0,1) real/imag parts).
Mat ginibre(int rows, int cols, std::mt19937_64& rng);

}  // namespace qcorr
