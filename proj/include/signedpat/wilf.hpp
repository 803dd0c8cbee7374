#pragma once

// Wilf classification of pairs of 2-letter signed patterns by count
// fingerprints, and the reference table of pair counts at r = 5.

#include "signedpat/enumerate.hpp"

#include <vector>

namespace signedpat {

/// Pattern sets sharing one fingerprint up to the depth it was computed at.
/// Equal fingerprints at a finite depth do not prove Wilf equivalence.
struct WilfClass {
    PatternSet representative;
    /// Canonical forms of the symmetry orbits in this class, sorted.
    std::vector<PatternSet> members;
    CountSequence fingerprint;
};

/// All 2r^2 two-letter signed patterns over r signs, sorted.
std::vector<SignedPattern> two_letter_patterns(int r);

/// Every unordered pair of distinct 2-letter patterns over r signs, reduced
/// to canonical forms, fingerprinted to nmax and partitioned. Classes are
/// sorted by representative.
std::vector<WilfClass> classify_pairs(int r, int nmax, const SearchLimits& limits = {});

/// Number of classes found by classify_pairs; a too-small nmax can merge
/// classes. nmax >= 5 separates every class for r <= 5.
int wc(int r, int nmax, const SearchLimits& limits = {});

/// Partition arbitrary pattern sets by their fingerprints at depth nmax.
/// Returns index groups into `sets`, ordered by first member.
std::vector<std::vector<std::size_t>> group_by_fingerprint(std::span<const PatternSet> sets, int r, int nmax,
                                                           const SearchLimits& limits = {});

inline constexpr int kTableSignBound = 5;
inline constexpr int kTableDepth = 5;

struct Table1Entry {
    int row;
    PatternSet pair;
    std::vector<BigInt> expected;
};

/// The 17 reference pairs with their stored reference counts for n = 0..5 at r = 5.
const std::vector<Table1Entry>& table1_reference();

struct Table1Row {
    int row;
    PatternSet pair;
    std::vector<BigInt> expected;
    std::vector<BigInt> computed;
    bool match = false;
};

/// Brute-force fingerprints of the reference pairs compared with the
/// stored reference counts. Mismatches are reported per row, never thrown.
std::vector<Table1Row> table1(int nmax = kTableDepth, const SearchLimits& limits = {});

} // namespace signedpat
