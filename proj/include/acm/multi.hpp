#pragma once

// Commuting approximation of a family of p >= 3 Hermitian operators.
//
// The pair scheme runs p-1 times. Iteration t diagonalizes operator t
// inside the current block structure (so earlier commutation survives),
// quantizes its eigenvalues into the finalized approximant, truncates
// every later operator to the new groups, and intersects the block
// structure with those groups. Exceptional indices freeze into permanent
// singleton blocks with zero rows and columns in all later operators.
//
// Each iteration corrects the remaining operators by at most
// sqrt(3) * delta_t^(1/4), and the commutator sizes obey the recursion
// delta_{t+1} <= 8 * delta_t^(1/4). When the input delta satisfies
// delta <= 16^(-2 * 4^(p-2)) the telescoped total stays below
// 5 * delta^(1/4^(p-1)) for every operator.

#include <cstdint>
#include <utility>
#include <vector>

#include "acm/hermitian.hpp"
#include "acm/pair.hpp"
#include "acm/partition.hpp"

namespace acm {

struct MultiOptions {
    bool force = false;          // keep going past the per-iteration 1/16 gate
    bool analytic = false;       // parameters from the recursion, not measured deltas
    double delta_floor = 1e-14;  // as in PairOptions
    Tolerances tol;
};

// Disjoint index blocks plus the accumulated change of basis. Frozen
// indices are permanent singleton blocks.
struct BlockPartitionState {
    UnitaryBasis basis;
    std::vector<std::vector<Index>> blocks;
    std::vector<char> frozen;

    static BlockPartitionState initial(Index n);
    Index n() const { return static_cast<Index>(frozen.size()); }
    void check(const Tolerances& tol = {}) const;
};

struct MultiResult {
    std::vector<HermitianMatrix> approx;  // all in the final basis
    UnitaryBasis basis;                   // accumulated over the original space
    BlockPartitionState final_state;      // block structure after the last refinement
    std::vector<double> delta_measured;   // per iteration: max commutator with later operators
    std::vector<double> delta_params;     // per iteration: delta the parameters came from
    std::vector<double> delta_analytic;   // recursion from the input delta
    std::vector<double> errs;             // per operator, hs distance in the final basis
    std::vector<double> op_bounds;        // per operator claimed bound (see cli CSV)
    double input_delta = 0.0;             // max pairwise commutator size of the inputs
    double gamma = 0.0;                   // input delta^(1/4^(p-1)), floored
    double bound = 0.0;                   // 5 * gamma
    bool guaranteed = false;              // family condition and norm caps hold
    bool ledger_valid = false;            // per-iteration bounds applicable (no clamping)
    double finalized_commute_dev = 0.0;   // max hs size of [later rotation, finalized approx]
};

// True iff delta <= 16^(-2 * 4^(p-2)), decided exactly on the binary
// exponent (frexp), so boundary powers of two classify correctly and
// subnormal deltas need no special casing. Throws domain_error for p < 3
// (the pair path owns p = 2).
bool check_family_condition(double delta, int p);

// Per-index eigenvalues and a block-diagonal diagonalizing rotation.
// Requires h block-diagonal with respect to state.blocks within
// tol.herm(n) (structure_error otherwise). Values are per index, not
// globally sorted; a frozen index reports its diagonal entry.
std::pair<RealVector, UnitaryBasis> blockwise_eigh(const HermitianMatrix& h,
                                                   const BlockPartitionState& state,
                                                   const Tolerances& tol = {});

// Intersects the blocks with the label classes. Exceptional labels become
// frozen singletons; existing frozen indices stay frozen. Blocks only
// refine, never merge.
BlockPartitionState refine_blocks(const BlockPartitionState& state,
                                  const std::vector<std::int64_t>& labels);

// The recursion delta_1 = delta, delta_{t+1} = 8 * delta_t^(1/4), of
// length p-1. When the family condition holds, also verifies the closed
// form delta_t <= 16 * delta^(1/4^(t-1)) and monotone growth.
std::vector<double> analytic_delta_sequence(double delta, int p);

// Full pipeline for p >= 2 operators; p = 2 delegates to the pair scheme.
// Inputs must be Hermitian with operator norm at most 1 + tol.eig unless
// options.force is set. Without force, an iteration whose parameter delta
// exceeds 1/16 aborts with precondition_error.
MultiResult approximate_family(const std::vector<HermitianMatrix>& h,
                               const MultiOptions& options = {});

// Per-operator telescoped error bounds: operator i (0-based) collects
// 2 * delta_params[t]^(1/4) over iterations t <= min(i, p-2). Meaningful
// when result.ledger_valid.
std::vector<double> ledger_bounds(const MultiResult& result);

}  // namespace acm
