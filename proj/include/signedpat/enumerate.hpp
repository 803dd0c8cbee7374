#pragma once

// Exhaustive counting of pattern avoiders. This is the ground truth every
// formula, recurrence and series is checked against.

#include "signedpat/core.hpp"

#include <cstdint>
#include <vector>

namespace signedpat {

struct SearchLimits {
    /// Maximum number of candidate placements examined before giving up.
    std::uint64_t max_nodes = 100'000'000;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 1;
};

/// |E_n^r(T)|. Requires T.sign_bound() <= r. Builds signed permutations
/// left to right and prunes any prefix that already contains a pattern.
/// Throws CapacityError once more than limits.max_nodes placements have been
/// examined.
BigInt count_avoiders(int n, int r, const PatternSet& patterns, const SearchLimits& limits = {});

/// A classical pattern: a permutation of {1..k} in one-line notation.
using PlainPattern = std::vector<int>;

/// |S_n(T)| for classical patterns.
BigInt count_plain_avoiders(int n, std::span<const PlainPattern> patterns,
                            const SearchLimits& limits = {});

/// Counts |E_n^r(T)| for n = 0..nmax.
struct CountSequence {
    int sign_bound = 1;
    PatternSet pattern_set;
    std::vector<BigInt> counts;

    bool operator==(const CountSequence&) const = default;
};

CountSequence fingerprint(const PatternSet& patterns, int r, int nmax, const SearchLimits& limits = {});

/// `1,5,48,672`
std::string join_counts(std::span<const BigInt> counts, const char* sep = ",");

} // namespace signedpat
