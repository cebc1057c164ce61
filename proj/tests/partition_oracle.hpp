#pragma once

// Brute-force reference for the spectral partition, written independently
// of the library: buckets by linear scan over every edge, residue choice
// by direct enumeration of all k classes, invariants by pairwise loops.
// Deliberately O(n * K) and O(n^2); only fed small instances.

#include <acm/partition.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

// Bucket of `value` by scanning all 2K edges with exact comparisons.
inline std::int64_t bucket(double value, std::int64_t K) {
    const double edge_low = static_cast<double>(-K + 1) / static_cast<double>(K);
    if (value <= edge_low) return -K;
    for (std::int64_t j = -K + 1; j < K; ++j) {
        const double lo = static_cast<double>(j) / static_cast<double>(K);
        const double hi = static_cast<double>(j + 1) / static_cast<double>(K);
        if (lo < value && value <= hi) return j;
    }
    throw std::logic_error("oracle bucket scan fell through");
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b > 0) ++q;
    return q;
}

// Smallest residue class with the fewest unmasked indices, by enumeration.
inline std::int64_t best_residue(const std::vector<std::int64_t>& buckets,
                                 const std::vector<char>& mask, std::int64_t k) {
    std::int64_t best_r = 0;
    std::int64_t best_total = -1;
    for (std::int64_t r = 0; r < k; ++r) {
        std::int64_t total = 0;
        for (size_t i = 0; i < buckets.size(); ++i) {
            if (!mask.empty() && mask[i]) continue;
            if (((buckets[i] - r) % k + k) % k == 0) ++total;
        }
        if (best_total < 0 || total < best_total) {
            best_total = total;
            best_r = r;
        }
    }
    return best_r;
}

// Checks every contract property of `part` against the values it was
// built from. Returns true when all hold; otherwise fills `why`.
inline bool check_partition(const acm::RealVector& values,
                            const acm::SpectralPartition& part,
                            const std::vector<char>& mask = {},
                            std::string* why = nullptr) {
    const auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const auto n = static_cast<size_t>(values.size());
    const std::int64_t k = part.params.k;
    const std::int64_t m = part.params.m_res;
    const std::int64_t K = k * m;
    if (part.n != values.size()) return fail("size mismatch");
    if (part.group_of.size() != n || part.bucket_of.size() != n)
        return fail("label vector size mismatch");
    if (part.residue < 0 || part.residue >= k) return fail("residue out of range");

    std::vector<std::int64_t> want_bucket(n);
    for (size_t i = 0; i < n; ++i) want_bucket[i] = bucket(values(static_cast<acm::Index>(i)), K);

    std::int64_t unmasked = 0;
    for (size_t i = 0; i < n; ++i) {
        const bool masked = !mask.empty() && mask[i];
        if (!masked) {
            ++unmasked;
            if (part.bucket_of[i] != want_bucket[i])
                return fail("bucket mismatch at index " + std::to_string(i));
        }
    }

    if (part.residue != best_residue(want_bucket, mask, k))
        return fail("residue is not the enumeration minimizer");

    // Labels: masked or discarded-bucket indices are exceptional, the rest
    // carry the ceil group id of their bucket.
    std::int64_t exceptional_unmasked = 0;
    for (size_t i = 0; i < n; ++i) {
        const bool masked = !mask.empty() && mask[i];
        const std::int64_t label = part.group_of[i];
        if (masked) {
            if (label != acm::kExceptionalLabel)
                return fail("masked index not exceptional");
            continue;
        }
        const std::int64_t j = want_bucket[i];
        if (((j - part.residue) % k + k) % k == 0) {
            if (label != acm::kExceptionalLabel)
                return fail("discarded bucket index not exceptional");
            ++exceptional_unmasked;
        } else {
            if (label != ceil_div(j - part.residue, k))
                return fail("group id mismatch at index " + std::to_string(i));
            if (label < -m || label > m) return fail("group id out of range");
        }
    }
    if (exceptional_unmasked * k > static_cast<std::int64_t>(unmasked))
        return fail("pigeonhole bound violated");

    // Exceptional list: ascending, exactly the exceptional labels.
    std::vector<acm::Index> want_exceptional;
    for (size_t i = 0; i < n; ++i)
        if (part.group_of[i] == acm::kExceptionalLabel)
            want_exceptional.push_back(static_cast<acm::Index>(i));
    if (part.exceptional != want_exceptional) return fail("exceptional list mismatch");

    // Groups map: members consistent with labels, intervals spanning the
    // occupied buckets, centers within half a bucket width of members.
    std::map<std::int64_t, std::vector<acm::Index>> want_groups;
    for (size_t i = 0; i < n; ++i)
        if (part.group_of[i] != acm::kExceptionalLabel)
            want_groups[part.group_of[i]].push_back(static_cast<acm::Index>(i));
    if (part.groups.size() != want_groups.size()) return fail("group count mismatch");
    for (const auto& entry : part.groups) {
        auto it = want_groups.find(entry.first);
        if (it == want_groups.end()) return fail("unexpected group id");
        if (entry.second.members != it->second) return fail("group member mismatch");
        std::int64_t j_min = 0, j_max = 0;
        bool first = true;
        for (acm::Index idx : entry.second.members) {
            const std::int64_t j = want_bucket[static_cast<size_t>(idx)];
            if (first || j < j_min) j_min = j;
            if (first || j > j_max) j_max = j;
            first = false;
        }
        if (entry.second.lo != static_cast<double>(j_min) / static_cast<double>(K))
            return fail("interval lower edge mismatch");
        if (entry.second.hi != static_cast<double>(j_max + 1) / static_cast<double>(K))
            return fail("interval upper edge mismatch");
        const double center = acm::group_center(part, entry.first);
        if (!(center >= -1.0 && center <= 1.0)) return fail("center out of range");
        const double half_width = 1.0 / (2.0 * static_cast<double>(m));
        for (acm::Index idx : entry.second.members) {
            if (!(std::abs(values(idx) - center) <= half_width))
                return fail("center misses a member by more than half a width");
        }
    }

    // Pairwise contract: spread < 1/m inside a group, gap >= 1/(k m) across.
    const double spread_cap = 1.0 / static_cast<double>(m);
    const double gap_floor = 1.0 / static_cast<double>(K);
    for (size_t a = 0; a < n; ++a) {
        if (part.group_of[a] == acm::kExceptionalLabel) continue;
        for (size_t b = a + 1; b < n; ++b) {
            if (part.group_of[b] == acm::kExceptionalLabel) continue;
            const double diff = std::abs(values(static_cast<acm::Index>(a)) -
                                         values(static_cast<acm::Index>(b)));
            if (part.group_of[a] == part.group_of[b]) {
                if (!(diff < spread_cap))
                    return fail("intra-group spread reached 1/m");
            } else {
                if (!(diff >= gap_floor))
                    return fail("inter-group gap fell below 1/(k m)");
            }
        }
    }
    return true;
}

}  // namespace oracle
