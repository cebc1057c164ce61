#include "acm/multi.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace acm {

namespace {

constexpr double kGuaranteeCeiling = 0.0625;  // 1/16

double quartic_root(double x) { return std::sqrt(std::sqrt(x)); }

// delta^(1/4^rounds) through repeated exact-on-powers-of-two square roots.
double iterated_quartic_root(double delta, int rounds) {
    double g = delta;
    for (int i = 0; i < rounds; ++i) g = quartic_root(g);
    return g;
}

}  // namespace

BlockPartitionState BlockPartitionState::initial(Index n) {
    BlockPartitionState state;
    state.basis = UnitaryBasis::Identity(n);
    std::vector<Index> all(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    state.blocks.push_back(std::move(all));
    state.frozen.assign(static_cast<size_t>(n), 0);
    return state;
}

void BlockPartitionState::check(const Tolerances& tol) const {
    const Index size = n();
    std::vector<char> seen(static_cast<size_t>(size), 0);
    for (const auto& block : blocks) {
        if (block.empty())
            throw structure_error("block structure contains an empty block");
        for (Index i : block) {
            if (i < 0 || i >= size || seen[static_cast<size_t>(i)])
                throw structure_error("blocks do not partition the index set");
            seen[static_cast<size_t>(i)] = 1;
        }
        if (block.size() > 1)
            for (Index i : block)
                if (frozen[static_cast<size_t>(i)])
                    throw structure_error("frozen index inside a non-singleton block");
    }
    for (char s : seen)
        if (!s) throw structure_error("blocks do not cover the index set");
    basis.check(tol);
}

bool check_family_condition(double delta, int p) {
    if (p < 3)
        throw domain_error("family condition applies to p >= 3; use the pair path for p = 2");
    if (!(delta > 0.0))
        throw domain_error("family condition requires delta > 0");

    // Threshold is 2^(-8 * 4^(p-2)). Beyond the subnormal range no
    // positive double qualifies.
    if (p - 2 > 4) return false;  // 8 * 4^5 = 8192 > 1074 already
    const std::int64_t exponent = std::int64_t{8} << (2 * (p - 2));
    if (exponent > 1074) return false;

    int e = 0;
    const double f = std::frexp(delta, &e);  // delta = f * 2^e, f in [0.5, 1)
    return e < -exponent + 1 || (e == -exponent + 1 && f == 0.5);
}

std::pair<RealVector, UnitaryBasis> blockwise_eigh(const HermitianMatrix& h,
                                                   const BlockPartitionState& state,
                                                   const Tolerances& tol) {
    const Index n = h.n();
    if (n != state.n())
        throw dimension_error("blockwise_eigh requires matching dimensions");
    h.check(tol);

    // Cross-block entries must vanish; frozen rows are singleton blocks so
    // the same scan covers them.
    std::vector<std::int64_t> block_of(static_cast<size_t>(n), -1);
    for (size_t b = 0; b < state.blocks.size(); ++b)
        for (Index i : state.blocks[b]) block_of[static_cast<size_t>(i)] = static_cast<std::int64_t>(b);
    const double structure_tol = tol.herm(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (block_of[static_cast<size_t>(i)] != block_of[static_cast<size_t>(j)] &&
                std::abs(h.data(i, j)) > structure_tol)
                throw structure_error("matrix is not block-diagonal for the current blocks");

    RealVector values(n);
    Matrix rotation = Matrix::Zero(n, n);
    for (const auto& block : state.blocks) {
        if (block.size() == 1) {
            const Index i = block.front();
            values(i) = h.data(i, i).real();
            rotation(i, i) = Complex(1.0, 0.0);
            continue;
        }
        Matrix sub(block.size(), block.size());
        for (size_t a = 0; a < block.size(); ++a)
            for (size_t b = 0; b < block.size(); ++b)
                sub(static_cast<Index>(a), static_cast<Index>(b)) = h.data(block[a], block[b]);
        Eigensystem es = eigh(HermitianMatrix(std::move(sub)));
        for (size_t a = 0; a < block.size(); ++a) {
            values(block[a]) = es.spectrum.values(static_cast<Index>(a));
            for (size_t b = 0; b < block.size(); ++b)
                rotation(block[a], block[b]) = es.basis.q(static_cast<Index>(a), static_cast<Index>(b));
        }
    }
    return {std::move(values), UnitaryBasis(std::move(rotation))};
}

BlockPartitionState refine_blocks(const BlockPartitionState& state,
                                  const std::vector<std::int64_t>& labels) {
    if (labels.size() != state.frozen.size())
        throw dimension_error("refine_blocks requires one label per index");

    BlockPartitionState next;
    next.basis = state.basis;
    next.frozen = state.frozen;
    for (const auto& block : state.blocks) {
        if (block.size() == 1 && state.frozen[static_cast<size_t>(block.front())]) {
            next.blocks.push_back(block);
            continue;
        }
        std::map<std::int64_t, std::vector<Index>> pieces;
        std::vector<Index> newly_frozen;
        for (Index i : block) {
            const std::int64_t label = labels[static_cast<size_t>(i)];
            if (label == kExceptionalLabel) {
                newly_frozen.push_back(i);
                next.frozen[static_cast<size_t>(i)] = 1;
            } else {
                pieces[label].push_back(i);
            }
        }
        for (auto& [label, piece] : pieces) {
            (void)label;
            next.blocks.push_back(std::move(piece));
        }
        for (Index i : newly_frozen) next.blocks.push_back({i});
    }
    return next;
}

std::vector<double> analytic_delta_sequence(double delta, int p) {
    if (!(delta > 0.0))
        throw domain_error("analytic_delta_sequence requires delta > 0");
    if (p < 2)
        throw domain_error("analytic_delta_sequence requires p >= 2");

    std::vector<double> seq;
    seq.reserve(static_cast<size_t>(p - 1));
    seq.push_back(delta);
    for (int t = 1; t < p - 1; ++t) seq.push_back(8.0 * quartic_root(seq.back()));

    if (p >= 3 && check_family_condition(delta, p)) {
        for (int t = 0; t < p - 1; ++t) {
            const double closed_form = 16.0 * iterated_quartic_root(delta, t);
            if (seq[static_cast<size_t>(t)] > closed_form * (1.0 + 1e-9))
                throw numeric_error("analytic recursion exceeds its closed form");
            if (t > 0 && seq[static_cast<size_t>(t)] < seq[static_cast<size_t>(t - 1)])
                throw numeric_error("analytic recursion is not monotone");
        }
    }
    return seq;
}

std::vector<double> ledger_bounds(const MultiResult& result) {
    const int p = static_cast<int>(result.approx.size());
    std::vector<double> bounds(static_cast<size_t>(p), 0.0);
    for (int i = 0; i < p; ++i) {
        const int touched = std::min(i + 1, p - 1);
        double total = 0.0;
        for (int t = 0; t < touched; ++t)
            total += 2.0 * quartic_root(result.delta_params[static_cast<size_t>(t)]);
        bounds[static_cast<size_t>(i)] = total;
    }
    return bounds;
}

namespace {

MultiResult delegate_to_pair(const std::vector<HermitianMatrix>& h, const MultiOptions& options) {
    PairOptions pair_options{options.force, options.delta_floor, options.tol};
    PairResult pr = approximate_pair(h[0], h[1], pair_options);

    MultiResult result;
    result.approx = {pr.approx1, pr.approx2};
    result.basis = pr.basis;
    result.final_state.basis = pr.basis;
    result.final_state.blocks.clear();
    result.final_state.frozen.assign(static_cast<size_t>(h[0].n()), 0);
    for (const auto& entry : pr.partition.groups)
        result.final_state.blocks.push_back(entry.second.members);
    for (Index i : pr.partition.exceptional) {
        result.final_state.blocks.push_back({i});
        result.final_state.frozen[static_cast<size_t>(i)] = 1;
    }
    result.input_delta = hs_norm(commutator(h[0], h[1]));
    const double floored = std::max(pr.delta, options.delta_floor);
    result.delta_measured = {pr.delta};
    result.delta_params = {std::min(floored, kGuaranteeCeiling)};
    result.delta_analytic = {floored};
    result.errs = {pr.err1, pr.err2};
    result.op_bounds = {pr.bound1, pr.bound2};
    result.gamma = quartic_root(floored);
    result.bound = 5.0 * result.gamma;
    result.guaranteed = pr.guaranteed;
    result.ledger_valid = pr.guaranteed;
    result.finalized_commute_dev = 0.0;
    return result;
}

}  // namespace

MultiResult approximate_family(const std::vector<HermitianMatrix>& h,
                               const MultiOptions& options) {
    const int p = static_cast<int>(h.size());
    if (p < 2)
        throw domain_error("approximate_family requires at least two operators");
    const Index n = h[0].n();
    for (const auto& hi : h) {
        if (hi.n() != n) throw dimension_error("approximate_family requires equal dimensions");
        hi.check(options.tol);
    }
    if (p == 2) return delegate_to_pair(h, options);

    bool norms_ok = true;
    for (const auto& hi : h) norms_ok = norms_ok && op_norm(hi) <= 1.0 + options.tol.eig;
    if (!norms_ok && !options.force)
        throw precondition_error("operator norm exceeds 1; pass force to proceed");

    MultiResult result;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            result.input_delta = std::max(result.input_delta, commutator_norm(h[i], h[j]));
    result.guaranteed = norms_ok && check_family_condition(
                                        std::max(result.input_delta, options.delta_floor), p);
    const double floored_input = std::max(result.input_delta, options.delta_floor);
    result.delta_analytic = analytic_delta_sequence(floored_input, p);
    result.gamma = iterated_quartic_root(floored_input, p - 1);
    result.bound = 5.0 * result.gamma;
    result.ledger_valid = norms_ok;

    BlockPartitionState state = BlockPartitionState::initial(n);
    std::vector<HermitianMatrix> cur = h;
    result.approx.resize(static_cast<size_t>(p));

    for (int t = 0; t < p - 1; ++t) {
        auto [values, rotation] = blockwise_eigh(cur[static_cast<size_t>(t)], state, options.tol);
        for (int j = t + 1; j < p; ++j)
            cur[static_cast<size_t>(j)] =
                hermitize(conjugate(cur[static_cast<size_t>(j)].data, rotation));
        state.basis = UnitaryBasis(state.basis.q * rotation.q);
        for (int s = 0; s < t; ++s)
            result.finalized_commute_dev =
                std::max(result.finalized_commute_dev,
                         hs_norm(commutator(result.approx[static_cast<size_t>(s)].data, rotation.q)));

        Matrix diag_t = Matrix(values.cast<Complex>().asDiagonal());
        double delta_t = 0.0;
        for (int j = t + 1; j < p; ++j)
            delta_t = std::max(delta_t, hs_norm(commutator(diag_t, cur[static_cast<size_t>(j)].data)));
        result.delta_measured.push_back(delta_t);

        double param_delta = options.analytic ? result.delta_analytic[static_cast<size_t>(t)]
                                              : delta_t;
        param_delta = std::max(param_delta, options.delta_floor);
        if (param_delta > kGuaranteeCeiling) {
            if (!options.force)
                throw precondition_error("iteration " + std::to_string(t + 1) +
                                         ": commutator size exceeds 1/16; pass force to proceed");
            param_delta = kGuaranteeCeiling;
        }
        if (param_delta < delta_t) result.ledger_valid = false;
        result.delta_params.push_back(param_delta);

        RealVector clamped = values.cwiseMax(-1.0).cwiseMin(1.0);
        SpectralPartition partition =
            build_partition_masked(clamped, choose_params(param_delta), state.frozen);
        result.approx[static_cast<size_t>(t)] = quantized_diagonal(clamped, partition);
        for (int j = t + 1; j < p; ++j)
            cur[static_cast<size_t>(j)] =
                truncate_to_blocks(cur[static_cast<size_t>(j)].data, partition);
        state = refine_blocks(state, partition.group_of);
    }
    result.approx[static_cast<size_t>(p - 1)] = cur[static_cast<size_t>(p - 1)];
    result.basis = state.basis;
    result.final_state = state;

    result.errs.resize(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i)
        result.errs[static_cast<size_t>(i)] =
            hs_norm(Matrix(conjugate(h[static_cast<size_t>(i)], result.basis) -
                           result.approx[static_cast<size_t>(i)].data));
    result.op_bounds = ledger_bounds(result);
    return result;
}

}  // namespace acm
