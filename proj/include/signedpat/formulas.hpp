#pragma once

// Closed forms and recurrences for |E_n^r(T)| over the pattern-set families
// with known enumerations. Each is checked against count_avoiders in tests.

#include "signedpat/core.hpp"
#include "signedpat/enumerate.hpp"

#include <vector>

namespace signedpat {

/// d_r(n) = sum_j j!·(r-1)^j·C(n,j)^2, the count for any single 2-letter
/// signed pattern.
BigInt d_count(int n, int r);
std::vector<BigInt> d_count_table(int nmax, int r);

/// |E_n^r({1^a})| = n!·(r-1)^n.
BigInt length1_count(int n, int r, int a);

/// |E_n^r(T_(u))| for classical patterns T all carrying sign u:
/// sum_j C(n,j)^2·|S_j(T)|·(n-j)!·(r-1)^(n-j).
BigInt homogeneous_count(int n, int r, std::span<const PlainPattern> patterns, int u);

/// |E_n^r(F_tau)| = r^n·|S_n(tau)| where F_tau holds every sign decoration of tau.
BigInt full_closure_count(int n, int r, const PlainPattern& tau);

/// p_n = (r-1)·n·p_{n-1} + sum_i C(n-1,i-1)·(n-i)!·(r-l)^(n-i)·p_{i-1}.
BigInt chain_count_rec(int n, int r, int l);
std::vector<BigInt> chain_count_table(int nmax, int r, int l);
/// prod_{j=0..n} (j(r-1)+1), the l = r case of the chain recurrence.
BigInt chain_full_count(int n, int r);

struct GoodComponent {
    std::vector<PlainPattern> patterns;
    int sign = 1;
};

/// A union of homogeneous pattern sets with pairwise distinct signs.
class GoodSetSpec {
public:
    GoodSetSpec(std::vector<GoodComponent> components, int sign_bound);

    int sign_bound() const noexcept { return sign_bound_; }
    std::span<const GoodComponent> components() const noexcept { return components_; }

    /// The signed pattern set this spec describes.
    PatternSet to_pattern_set() const;

private:
    std::vector<GoodComponent> components_;
    int sign_bound_;
};

/// Peels one component at a time:
/// f(n, r, [T_1, rest]) = sum_j C(n,j)^2·|S_j(T_1)|·f(n-j, r-1, rest),
/// f(m, r, []) = m!·r^m.
BigInt good_set_count(int n, const GoodSetSpec& spec);

/// sum over i_1+..+i_l <= n of multinomial(n; i_1..i_l, rest)^2·rest!·(r-l)^rest,
/// the count for l single 2-letter homogeneous patterns on distinct signs.
BigInt multi_line_count(int n, int r, int l);

/// n!·(n+r-1)·(r-1)^(n-1), and 1 at n = 0.
BigInt case1_count(int n, int r);

/// p_n = n(r-1)p_{n-1} + sum_i C(n-1,i-1)·d_{r-1}(n-i)·d_{r-1}(i-1), r >= 3.
BigInt case3_count_rec(int n, int r);
std::vector<BigInt> case3_count_table(int nmax, int r);

/// p_n = n(r-1)p_{n-1} + sum_i C(n-1,i-1)·(n-i)!·(r-1)^(n-i)·d_{r-1}(i-1), r >= 2.
BigInt case4_count_rec(int n, int r);
std::vector<BigInt> case4_count_table(int nmax, int r);

/// Both sides of the combinatorial identity obtained by counting
/// {(1^1,2^1),...,(1^l,2^l)} and {(1^1,2^2),(1^3,2^4),...} two ways, each
/// divided by n!^2:
///   lhs = sum (r-l)^rest / (prod i_j!^2 · rest!)
///   rhs = sum (r-2l)^rest · prod d_2(i_j) / (prod i_j!^2 · rest!)
/// over i_1+..+i_l <= n, rest = n - sum i_j.
struct IdentityResult {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

IdentityResult identity_check(int n, int r, int l);

} // namespace signedpat
