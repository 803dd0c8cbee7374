#pragma once

// Test-only helpers: random generators and an unpruned brute-force oracle
// that shares no code with the library's containment or search.

#include "signedpat/core.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace signedpat::testing {

inline SignedPermutation random_permutation(int n, int r, std::mt19937& rng)
{
    std::vector<int> symbols(n);
    std::iota(symbols.begin(), symbols.end(), 1);
    std::shuffle(symbols.begin(), symbols.end(), rng);
    std::uniform_int_distribution<int> sign(1, r);
    std::vector<int> signs(n);
    for (int& s : signs)
        s = sign(rng);
    return SignedPermutation(std::move(symbols), std::move(signs), r);
}

inline SignedPattern random_pattern(int k, int r, std::mt19937& rng)
{
    return SignedPattern(random_permutation(k, r, rng));
}

/// Between 1 and max_size random patterns of length k (duplicates collapse).
inline PatternSet random_pattern_set(int k, int r, int max_size, std::mt19937& rng)
{
    std::uniform_int_distribution<int> size(1, max_size);
    std::vector<SignedPattern> patterns;
    for (int i = size(rng); i > 0; --i)
        patterns.push_back(random_pattern(k, r, rng));
    return PatternSet(std::move(patterns), r);
}

/// Occurrence test by enumerating every k-subset of positions.
inline bool naive_contains(const std::vector<int>& symbols, const std::vector<int>& signs,
                           std::span<const int> pat_symbols, std::span<const int> pat_signs)
{
    const int n = static_cast<int>(symbols.size());
    const int k = static_cast<int>(pat_symbols.size());
    if (k > n)
        return false;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (pick[i])
                idx.push_back(i);
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            ok = signs[idx[a]] == pat_signs[a];
            for (int b = a + 1; b < k && ok; ++b)
                ok = (symbols[idx[a]] < symbols[idx[b]]) == (pat_symbols[a] < pat_symbols[b]);
        }
        if (ok)
            return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

/// |E_n^r(T)| by filtering every element of E_n^r.
inline unsigned long long unpruned_count(int n, int r, const PatternSet& patterns)
{
    std::vector<int> symbols(n);
    std::iota(symbols.begin(), symbols.end(), 1);
    unsigned long long total = 0;
    do {
        std::vector<int> signs(n, 1);
        while (true) {
            bool avoid = true;
            for (const auto& p : patterns)
                if (naive_contains(symbols, signs, p.symbols(), p.signs())) {
                    avoid = false;
                    break;
                }
            total += avoid;
            int i = 0;
            while (i < n && signs[i] == r)
                signs[i++] = 1;
            if (i == n)
                break;
            ++signs[i];
        }
    } while (std::next_permutation(symbols.begin(), symbols.end()));
    return total;
}

inline SignedPattern up(int a, int b, int r) { return SignedPattern({1, 2}, {a, b}, r); }
inline SignedPattern down(int a, int b, int r) { return SignedPattern({2, 1}, {a, b}, r); }

} // namespace signedpat::testing
