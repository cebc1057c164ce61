#include "acm/pair.hpp"

#include <algorithm>
#include <cmath>

namespace acm {

namespace {

constexpr double kGuaranteeCeiling = 0.0625;  // 1/16

double quartic_root(double x) { return std::sqrt(std::sqrt(x)); }

}  // namespace

PartitionParams choose_params(double delta) {
    if (!(delta > 0.0))
        throw domain_error("choose_params requires delta > 0");
    if (delta > kGuaranteeCeiling)
        throw domain_error("choose_params requires delta <= 1/16");

    // k is the largest integer with k^2 * delta <= 4. The float guess is
    // fixed up so boundary deltas (powers of two, decimal corner cases)
    // land on the exact integer.
    const double k_guess = std::floor(2.0 / std::sqrt(delta));
    if (!(k_guess < 4.5e15))
        throw numeric_error("delta too small for exact partition parameters");
    const auto k_ok = [delta](std::int64_t k) {
        const double kk = static_cast<double>(k) * static_cast<double>(k);
        return kk * delta <= 4.0;
    };
    std::int64_t k = std::max<std::int64_t>(1, static_cast<std::int64_t>(k_guess));
    while (k > 1 && !k_ok(k)) --k;
    while (k_ok(k + 1)) ++k;

    // m_res is the largest integer with 16 * m^4 * delta <= 1; always >= 1
    // in the admissible delta range.
    const auto m_ok = [delta](std::int64_t m) {
        const double mm = static_cast<double>(m) * static_cast<double>(m);
        return 16.0 * mm * mm * delta <= 1.0;
    };
    std::int64_t m = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor(1.0 / (2.0 * quartic_root(delta)))));
    while (m > 1 && !m_ok(m)) --m;
    while (m_ok(m + 1)) ++m;

    PartitionParams params{k, m};
    params.check();
    return params;
}

HermitianMatrix quantized_diagonal(const RealVector& values, const SpectralPartition& partition) {
    const Index n = values.size();
    if (n != partition.n)
        throw dimension_error("quantized_diagonal requires matching sizes");

    std::map<std::int64_t, double> centers;
    for (const auto& [id, interval] : partition.groups) {
        (void)interval;
        centers[id] = group_center(partition, id);
    }

    Matrix out = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        const double mu = partition.is_exceptional(i)
                              ? values(i)
                              : centers.at(partition.group_of[static_cast<size_t>(i)]);
        out(i, i) = Complex(mu, 0.0);
    }
    return HermitianMatrix(std::move(out));
}

HermitianMatrix truncate_to_blocks(const Matrix& h, const SpectralPartition& partition) {
    if (h.rows() != partition.n || h.cols() != partition.n)
        throw dimension_error("truncate_to_blocks requires matching dimensions");

    Matrix out = Matrix::Zero(partition.n, partition.n);
    for (const auto& [id, interval] : partition.groups) {
        (void)id;
        for (Index i : interval.members)
            for (Index j : interval.members) out(i, j) = h(i, j);
    }
    // Same storage convention as hermitize: the lower triangle is the exact
    // conjugate of the upper one, so re-hermitizing is a bitwise no-op.
    for (Index j = 0; j < partition.n; ++j)
        for (Index i = 0; i < j; ++i) out(j, i) = std::conj(out(i, j));
    return HermitianMatrix(std::move(out));
}

PairResult approximate_pair(const HermitianMatrix& h1, const HermitianMatrix& h2,
                            const PairOptions& options) {
    if (h1.n() != h2.n())
        throw dimension_error("approximate_pair requires equal dimensions");
    h1.check(options.tol);
    h2.check(options.tol);

    Eigensystem es = eigh(h1);
    const double norm1 =
        std::max(std::abs(es.spectrum.values(0)), std::abs(es.spectrum.values(h1.n() - 1)));
    const double norm2 = op_norm(h2);
    const bool norms_ok = norm1 <= 1.0 + options.tol.eig && norm2 <= 1.0 + options.tol.eig;
    if (!norms_ok && !options.force)
        throw precondition_error("operator norm exceeds 1; pass force to proceed");

    PairResult result;
    result.basis = es.basis;
    result.eigenvalues = es.spectrum.values;

    HermitianMatrix rotated2 = hermitize(conjugate(h2, es.basis));
    RealVector clamped = es.spectrum.values.cwiseMax(-1.0).cwiseMin(1.0);
    Matrix diag1 = Matrix(es.spectrum.values.cast<Complex>().asDiagonal());
    result.delta = hs_norm(commutator(diag1, rotated2.data));

    const double floored = std::max(result.delta, options.delta_floor);
    result.guaranteed = norms_ok && floored <= kGuaranteeCeiling;
    if (!result.guaranteed && !options.force && floored > kGuaranteeCeiling)
        throw precondition_error("commutator size exceeds 1/16; pass force to proceed");
    const double param_delta = std::min(floored, kGuaranteeCeiling);

    result.partition = build_partition(clamped, choose_params(param_delta));
    result.approx1 = quantized_diagonal(clamped, result.partition);
    result.approx2 = truncate_to_blocks(rotated2.data, result.partition);

    result.err1 =
        (es.spectrum.values - result.approx1.data.diagonal().real()).norm() /
        std::sqrt(static_cast<double>(h1.n()));
    result.err2 = hs_norm(Matrix(rotated2.data - result.approx2.data));
    result.bound1 = 2.0 * quartic_root(floored);
    result.bound2 = std::sqrt(3.0) * quartic_root(floored);
    return result;
}

HermitianMatrix restore_basis(const HermitianMatrix& a, const UnitaryBasis& q) {
    if (a.n() != q.n())
        throw dimension_error("restore_basis requires matching dimensions");
    return hermitize(q.q * a.data * q.q.adjoint());
}

}  // namespace acm
