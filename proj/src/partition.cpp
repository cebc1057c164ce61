#include "acm/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace acm {

namespace {

// K = k*m_res must stay below 2^52 so every bucket edge double(j)/double(K)
// is formed from exactly representable integers.
constexpr std::int64_t kMaxBuckets = std::int64_t{1} << 52;

double bucket_edge(std::int64_t j, std::int64_t big_k) {
    return static_cast<double>(j) / static_cast<double>(big_k);
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    return num / den + (num % den > 0 ? 1 : 0);
}

std::int64_t residue_class(std::int64_t j, std::int64_t k) {
    return ((j % k) + k) % k;
}

}  // namespace

void PartitionParams::check() const {
    if (k < 1 || m_res < 1)
        throw domain_error("partition parameters must be positive");
    if (k > kMaxBuckets / m_res)
        throw numeric_error("bucket count k*m_res exceeds exact-edge range");
}

std::int64_t bucket_index(double value, std::int64_t k, std::int64_t m_res) {
    PartitionParams{k, m_res}.check();
    if (!(value >= -1.0 && value <= 1.0))
        throw domain_error("bucket_index requires a value in [-1, 1]");
    const std::int64_t big_k = k * m_res;
    if (value <= bucket_edge(-big_k + 1, big_k)) return -big_k;

    std::int64_t j = static_cast<std::int64_t>(std::floor(value * static_cast<double>(big_k)));
    j = std::clamp(j, -big_k + 1, big_k - 1);
    // fix the float guess so that edge(j) < value <= edge(j+1)
    while (j > -big_k + 1 && !(bucket_edge(j, big_k) < value)) --j;
    while (j < big_k - 1 && !(value <= bucket_edge(j + 1, big_k))) ++j;
    return j;
}

std::int64_t select_residue(const std::map<std::int64_t, std::int64_t>& bucket_counts,
                            std::int64_t k) {
    if (k < 1) throw domain_error("select_residue requires k >= 1");

    std::map<std::int64_t, std::int64_t> totals;  // residue -> occupied count
    for (const auto& [bucket, count] : bucket_counts) {
        if (count <= 0) continue;
        totals[residue_class(bucket, k)] += count;
    }

    // Any residue class with no occupied bucket has total 0, which is
    // minimal; the tie-break picks the smallest such r. Walking the
    // occupied residues in order finds the first hole.
    if (static_cast<std::int64_t>(totals.size()) < k) {
        std::int64_t r = 0;
        for (const auto& [residue, total] : totals) {
            (void)total;
            if (residue != r) break;
            ++r;
        }
        return r;
    }

    std::int64_t best_r = 0;
    std::int64_t best_total = std::numeric_limits<std::int64_t>::max();
    for (const auto& [residue, total] : totals) {
        if (total < best_total) {
            best_total = total;
            best_r = residue;
        }
    }
    return best_r;
}

SpectralPartition build_partition(const RealVector& values, const PartitionParams& params) {
    for (Index i = 1; i < values.size(); ++i)
        if (values(i - 1) > values(i))
            throw domain_error("build_partition requires ascending values");
    return build_partition_masked(values, params, {});
}

SpectralPartition build_partition_masked(const RealVector& values,
                                         const PartitionParams& params,
                                         const std::vector<char>& mask) {
    params.check();
    const Index n = values.size();
    if (n < 1)
        throw dimension_error("build_partition requires at least one value");
    if (!mask.empty() && static_cast<Index>(mask.size()) != n)
        throw dimension_error("mask size does not match value count");
    const auto masked = [&](Index i) {
        return !mask.empty() && mask[static_cast<size_t>(i)];
    };

    SpectralPartition part;
    part.n = n;
    part.params = params;
    part.bucket_of.assign(static_cast<size_t>(n), 0);
    part.group_of.assign(static_cast<size_t>(n), kExceptionalLabel);

    std::map<std::int64_t, std::int64_t> counts;
    for (Index i = 0; i < n; ++i) {
        if (masked(i)) continue;
        if (!(values(i) >= -1.0 && values(i) <= 1.0))
            throw domain_error("build_partition requires values in [-1, 1]");
        const std::int64_t j = bucket_index(values(i), params.k, params.m_res);
        part.bucket_of[static_cast<size_t>(i)] = j;
        ++counts[j];
    }
    part.residue = select_residue(counts, params.k);

    const std::int64_t big_k = params.buckets_per_side();
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> span;  // group -> bucket range
    for (Index i = 0; i < n; ++i) {
        if (masked(i)) {
            part.exceptional.push_back(i);
            continue;
        }
        const std::int64_t j = part.bucket_of[static_cast<size_t>(i)];
        if (residue_class(j - part.residue, params.k) == 0) {
            part.exceptional.push_back(i);
            continue;
        }
        const std::int64_t a = ceil_div(j - part.residue, params.k);
        part.group_of[static_cast<size_t>(i)] = a;
        part.groups[a].members.push_back(i);
        auto [it, fresh] = span.try_emplace(a, j, j);
        if (!fresh) {
            it->second.first = std::min(it->second.first, j);
            it->second.second = std::max(it->second.second, j);
        }
    }
    for (auto& [a, interval] : part.groups) {
        const auto [j_lo, j_hi] = span.at(a);
        interval.lo = bucket_edge(j_lo, big_k);
        interval.hi = bucket_edge(j_hi + 1, big_k);
    }
    return part;
}

double group_center(const SpectralPartition& partition, std::int64_t group_id) {
    const GroupInterval& g = partition.groups.at(group_id);
    return 0.5 * (g.lo + g.hi);
}

}  // namespace acm
