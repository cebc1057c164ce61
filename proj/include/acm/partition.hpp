#pragma once

// Gap-based partition of eigenvalue indices.
//
// [-1, 1] splits into K = k * m_res half-open buckets (j/K, (j+1)/K] for
// j = -K .. K-1, the lowest bucket closed on the left. Buckets whose index
// is congruent to a chosen residue r0 (mod k) are discarded: their indices
// form the exceptional set. The surviving runs of k-1 consecutive buckets
// form groups with id a = ceil((j - r0) / k). By pigeonhole r0 can always
// be chosen so the exceptional set holds at most n/k indices, and then
//
//   * same group      =>  |value_i - value_j| <  1/m_res
//   * different group =>  |value_i - value_j| >= 1/(k*m_res)
//
// hold exactly. The gap comes from the discarded bucket between any two
// neighboring groups.

#include <cstdint>
#include <map>
#include <vector>

#include "acm/hermitian.hpp"

namespace acm {

struct PartitionParams {
    std::int64_t k = 1;      // residue classes; exceptional set is <= n/k
    std::int64_t m_res = 1;  // resolution; intra-group spread is < 1/m_res

    std::int64_t buckets_per_side() const { return k * m_res; }
    void check() const;
};

// Per-index label: exceptional indices carry kExceptionalLabel, grouped
// indices carry their group id a with -m_res <= a <= m_res.
inline constexpr std::int64_t kExceptionalLabel = INT64_MIN;

// Occupied-bucket span and members of one group.
struct GroupInterval {
    double lo = 0.0;             // lower edge of the lowest occupied bucket
    double hi = 0.0;             // upper edge of the highest occupied bucket
    std::vector<Index> members;  // ascending index list
};

struct SpectralPartition {
    Index n = 0;
    PartitionParams params;
    std::int64_t residue = 0;                     // chosen r0 in [0, k)
    std::vector<std::int64_t> bucket_of;          // per index; unset for masked
    std::vector<std::int64_t> group_of;           // per index, kExceptionalLabel for J
    std::map<std::int64_t, GroupInterval> groups; // nonempty groups only
    std::vector<Index> exceptional;               // ascending indices of J

    bool is_exceptional(Index i) const { return group_of[static_cast<size_t>(i)] == kExceptionalLabel; }
};

// Bucket index j in [-K, K-1] with value in (j/K, (j+1)/K], K = k*m_res;
// the left bucket j = -K additionally contains -1 itself. Edges are the
// doubles double(j)/double(K), compared exactly.
std::int64_t bucket_index(double value, std::int64_t k, std::int64_t m_res);

// Residue r0 in [0, k) minimizing the total count over buckets congruent
// to r0 (mod k); ties break to the smallest r0. Buckets with nonpositive
// counts are ignored, so sparse count maps are fine.
std::int64_t select_residue(const std::map<std::int64_t, std::int64_t>& bucket_counts,
                            std::int64_t k);

// Partition for ascending values in [-1, 1]. Throws domain_error on
// unsorted or out-of-range input.
SpectralPartition build_partition(const RealVector& values, const PartitionParams& params);

// Same construction without the sortedness requirement and with an
// optional mask: masked indices are forced exceptional and excluded from
// the residue count (so the <= n/k pigeonhole bound applies to the
// unmasked indices only). An empty mask masks nothing.
SpectralPartition build_partition_masked(const RealVector& values,
                                         const PartitionParams& params,
                                         const std::vector<char>& mask);

// Midpoint of the group's occupied-bucket span. Every member value sits
// within 1/(2*m_res) of it, and it lies in [-1, 1]. Throws
// std::out_of_range for an absent group id.
double group_center(const SpectralPartition& partition, std::int64_t group_id);

}  // namespace acm
