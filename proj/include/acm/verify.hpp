#pragma once

// Independent re-derivation of every claim a result makes: norms,
// commutators, and error bounds are recomputed from the raw inputs and
// outputs, never copied from the result's own diagnostics. Exact-zero
// claims are compared against literal zero; inequality claims get a small
// n-scaled absolute slack for eigensolver round-off.

#include <string>
#include <vector>

#include "acm/multi.hpp"
#include "acm/pair.hpp"

namespace acm {

struct CheckResult {
    std::string name;
    double claimed = 0.0;    // the bound being asserted
    double measured = 0.0;   // the recomputed quantity
    double tolerance = 0.0;  // absolute slack granted on top of claimed
    bool passed = false;
    bool applicable = true;  // false: recorded for completeness, counts as passed
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool overall = true;

    void add(CheckResult check);
    void add_inapplicable(std::string name, double claimed, double measured);
};

// Slack for inequality checks: absolute, scaled by dimension.
inline double verification_slack(Index n) { return 1e-9 * static_cast<double>(n); }

// Re-derives the pair claims: Hermiticity of both outputs, operator norm
// caps, exact commutation of the pair, exact commutation of the first
// input's diagonalized form with the first output, the two error bounds
// (skipped as inapplicable when the result is not guaranteed), and
// agreement of the stored delta with a fresh measurement. delta_floor
// must match the one the pipeline ran with.
VerificationReport verify_pair(const HermitianMatrix& h1, const HermitianMatrix& h2,
                               const PairResult& result, double delta_floor = 1e-14,
                               const Tolerances& tol = {});

// Re-derives the family claims: Hermiticity, norm caps, pairwise exact
// commutation, the guaranteed-regime bound 5 * delta^(1/4^(p-1)) when
// applicable, the per-iteration telescoped ledger when applicable, and
// delta agreement.
VerificationReport verify_family(const std::vector<HermitianMatrix>& h,
                                 const MultiResult& result, double delta_floor = 1e-14,
                                 const Tolerances& tol = {});

// One line per check: "name claimed measured tolerance status", then an
// "overall" line. Stable across reruns, suitable for bitwise comparison.
std::string to_text(const VerificationReport& report);

}  // namespace acm
