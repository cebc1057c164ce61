#pragma once

// Seeded random instances: exactly commuting Hermitian families (a common
// random eigenbasis with independent spectra) plus scaled Hermitian noise.
// Every draw is keyed by a sub-seed derived from the base seed with fixed
// integer arithmetic, so instances are reproducible and independent of
// generation order.

#include <cstdint>
#include <vector>

#include "acm/hermitian.hpp"

namespace acm {

// SplitMix64 step; the standard finalizer, used for sub-seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

// Sub-seed for a named stream of the base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// n x n matrix of independent standard complex Gaussian entries.
Matrix random_gaussian(Index n, std::uint64_t seed);

// Orthonormalization (QR) of a seeded complex Gaussian matrix.
UnitaryBasis random_unitary(Index n, std::uint64_t seed);

// p Hermitian matrices: Q diag(s_i) Q^* with spectra s_i uniform in
// [-1, 1] and a shared random unitary Q, plus epsilon times unit-norm
// Hermitian noise, each result rescaled to operator norm at most 1.
// epsilon = 0 yields an exactly commuting family up to round-off.
std::vector<HermitianMatrix> generate_family(Index n, int p, double epsilon,
                                             std::uint64_t seed);

}  // namespace acm
