#pragma once

// Signed permutations, signed patterns, the containment predicate and the
// symmetry group <reverse, complement, sign relabelings>.
//
// Symbols and signs are 1-based everywhere they cross this interface.

#include "signedpat/numeric.hpp"

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace signedpat {

/// An element of E_n^r: a permutation of {1..n} with a sign in {1..r} at
/// each position.
class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> symbols, std::vector<int> signs, int sign_bound);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    int sign_bound() const noexcept { return sign_bound_; }
    std::span<const int> symbols() const noexcept { return symbols_; }
    std::span<const int> signs() const noexcept { return signs_; }

    /// Same symbols and signs, viewed under a larger sign bound.
    SignedPermutation with_sign_bound(int sign_bound) const;

    /// `3^1 2^2 1^2`
    std::string to_string() const;

    bool operator==(const SignedPermutation&) const = default;
    /// Length, then symbols lexicographically, then signs, then sign bound.
    std::strong_ordering operator<=>(const SignedPermutation& other) const;

private:
    std::vector<int> symbols_;
    std::vector<int> signs_;
    int sign_bound_ = 1;
};

/// A nonempty signed permutation used as a forbidden configuration.
class SignedPattern : public SignedPermutation {
public:
    SignedPattern(std::vector<int> symbols, std::vector<int> signs, int sign_bound);
    explicit SignedPattern(SignedPermutation perm);

    bool is_homogeneous() const noexcept;
};

/// A finite set of signed patterns sharing one sign bound, kept sorted and
/// free of duplicates.
class PatternSet {
public:
    explicit PatternSet(int sign_bound = 1);
    PatternSet(std::vector<SignedPattern> patterns, int sign_bound);

    int sign_bound() const noexcept { return sign_bound_; }
    std::size_t size() const noexcept { return patterns_.size(); }
    bool empty() const noexcept { return patterns_.empty(); }
    std::span<const SignedPattern> patterns() const noexcept { return patterns_; }
    auto begin() const noexcept { return patterns_.begin(); }
    auto end() const noexcept { return patterns_.end(); }

    PatternSet with_sign_bound(int sign_bound) const;
    bool contains_pattern(const SignedPattern& pat) const;

    /// `1^1 2^2; 2^1 1^3`, the literal grammar accepted by parse_pattern_set.
    std::string to_string() const;

    bool operator==(const PatternSet&) const = default;
    std::strong_ordering operator<=>(const PatternSet& other) const;

private:
    std::vector<SignedPattern> patterns_;
    int sign_bound_ = 1;
};

/// True iff some subsequence of `perm` is order-isomorphic to the symbols of
/// `pat` and carries exactly the signs of `pat`.
bool contains(const SignedPermutation& perm, const SignedPattern& pat);
bool avoids(const SignedPermutation& perm, const PatternSet& patterns);

/// True iff `pat` occurs in the sequence with its last letter at the final
/// position. Used by the incremental search; the sequence need not be a
/// permutation of {1..n}, only have distinct symbols.
bool occurs_ending_at_last(std::span<const int> symbols, std::span<const int> signs,
                           const SignedPattern& pat);

/// er^reverse · ec^complement · h_delta acting on E_n^r. The sign relabeling
/// acts first, then complement, then reversal; the three commute.
class SymmetryElement {
public:
    /// Identity on sign bound r.
    explicit SymmetryElement(int sign_bound = 1);
    /// sign_map[u-1] is the image of sign u; must be a permutation of {1..r}.
    SymmetryElement(bool reverse, bool complement, std::vector<int> sign_map);

    static SymmetryElement identity(int sign_bound) { return SymmetryElement(sign_bound); }
    static SymmetryElement reversal(int sign_bound);
    static SymmetryElement complementation(int sign_bound);
    /// es: sign u goes to r+1-u.
    static SymmetryElement sign_complement(int sign_bound);
    static SymmetryElement relabel(std::vector<int> sign_map);

    bool reverses() const noexcept { return reverse_; }
    bool complements() const noexcept { return complement_; }
    std::span<const int> sign_map() const noexcept { return sign_map_; }
    int sign_bound() const noexcept { return static_cast<int>(sign_map_.size()); }
    bool is_identity() const;

    /// (*this)(other(x)).
    SymmetryElement compose(const SymmetryElement& other) const;

    SignedPermutation apply(const SignedPermutation& perm) const;
    SignedPattern apply(const SignedPattern& pat) const;
    PatternSet apply(const PatternSet& patterns) const;

    std::string to_string() const;

    bool operator==(const SymmetryElement&) const = default;
    auto operator<=>(const SymmetryElement&) const = default;

private:
    bool reverse_ = false;
    bool complement_ = false;
    std::vector<int> sign_map_;
};

inline SignedPermutation apply_symmetry(const SymmetryElement& g, const SignedPermutation& perm)
{
    return g.apply(perm);
}

inline PatternSet apply_symmetry_set(const SymmetryElement& g, const PatternSet& patterns)
{
    return g.apply(patterns);
}

/// Largest sign bound for which the r! relabelings are enumerated.
inline constexpr int kMaxGroupSignBound = 8;

/// All 4·r! elements of <er, ec, h_delta>. Throws CapacityError for r > 8.
std::vector<SymmetryElement> group_elements(int sign_bound);

/// Order of the subgroup generated by `generators` (closure under compose).
std::size_t generated_group_order(std::span<const SymmetryElement> generators);

std::set<PatternSet> symmetry_orbit(const PatternSet& patterns);
/// Lexicographically least member of the orbit.
PatternSet canonical_form(const PatternSet& patterns);

} // namespace signedpat
