#pragma once

// Commuting approximation of an almost-commuting Hermitian pair.
//
// The first operator is diagonalized and its eigenvalues quantized: every
// partition group collapses onto the single double at its interval center,
// exceptional indices keep their eigenvalue. The second operator, rotated
// into the same basis, is truncated to the group blocks. The two outputs
// then commute exactly, not just approximately: the diagonal is constant
// within every block, so both products multiply identical doubles.
//
// With delta = hs_norm of the commutator and both operator norms at most
// one, the parameters k = floor(2/delta^(1/2)), m_res =
// floor(1/(2 delta^(1/4))) give
//
//   err1 <= 1/(2 m_res)                     <= 2 delta^(1/4)
//   err2 <= sqrt(delta^2 k^2 m_res^2 + 2/k) <= sqrt(3) delta^(1/4)
//
// whenever delta <= 1/16.

#include <cstdint>

#include "acm/hermitian.hpp"
#include "acm/partition.hpp"

namespace acm {

struct PairOptions {
    bool force = false;         // run outside the guaranteed regime
    double delta_floor = 1e-14; // parameter choice floor for near-commuting input
    Tolerances tol;
};

struct PairResult {
    HermitianMatrix approx1;    // diagonal, in the rotated basis
    HermitianMatrix approx2;    // block-diagonal, same basis
    UnitaryBasis basis;         // columns diagonalize the first input
    SpectralPartition partition;
    RealVector eigenvalues;     // of the first input, ascending, unclamped
    double delta = 0.0;         // measured commutator size, rotated basis
    double err1 = 0.0;          // hs distance first input -> approx1
    double err2 = 0.0;          // hs distance rotated second input -> approx2
    double bound1 = 0.0;        // 2 * delta^(1/4)
    double bound2 = 0.0;        // sqrt(3) * delta^(1/4)
    bool guaranteed = false;    // delta <= 1/16 and operator norms <= 1
};

// Partition parameters for a commutator of size delta. Requires
// 0 < delta <= 1/16; both outputs are at least 1. The floors are computed
// with exact integer correction so parameter boundaries land exactly.
PartitionParams choose_params(double delta);

// Diagonal matrix with entry i equal to values(i) for exceptional i and to
// the group's interval center otherwise. One shared double per group: the
// commutation of the pair is exact because of this sharing.
HermitianMatrix quantized_diagonal(const RealVector& values, const SpectralPartition& partition);

// Keeps entry (i, j) iff i and j carry the same non-exceptional group
// label, zeroes everything else (literal zeros). A compression, so the
// operator norm never grows; Hermitian whenever the input is.
HermitianMatrix truncate_to_blocks(const Matrix& h, const SpectralPartition& partition);

// Full pipeline. Inputs must be Hermitian within tol and have operator
// norm at most 1 + tol.eig unless options.force is set; in force mode the
// parameter delta is additionally clamped to 1/16 and the result is not
// guaranteed. Throws precondition_error on violated preconditions.
PairResult approximate_pair(const HermitianMatrix& h1, const HermitianMatrix& h2,
                            const PairOptions& options = {});

// Conjugates an approximant back to the original basis: Q A Q^*. Exact
// commutation degrades to round-off level after this.
HermitianMatrix restore_basis(const HermitianMatrix& a, const UnitaryBasis& q);

}  // namespace acm
