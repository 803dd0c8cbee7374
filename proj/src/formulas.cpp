#include "signedpat/formulas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace signedpat {

namespace {

void require_non_negative(int n)
{
    if (n < 0)
        throw DomainError("n must be non-negative, got " + std::to_string(n));
}

void require_sign_bound(int r)
{
    if (r < 1)
        throw DomainError("r must be positive, got " + std::to_string(r));
}

void validate_plain(const PlainPattern& p)
{
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw ValidationError("classical pattern is not a permutation of 1..k");
    if (p.empty())
        throw ValidationError("classical pattern must be nonempty");
}

// |S_j(T)| for j = 0..nmax.
std::vector<BigInt> plain_avoider_table(int nmax, std::span<const PlainPattern> patterns)
{
    std::vector<BigInt> table;
    table.reserve(nmax + 1);
    for (int j = 0; j <= nmax; ++j)
        table.push_back(count_plain_avoiders(j, patterns));
    return table;
}

// Calls visit(parts, rest) for every (i_1..i_l) with sum <= n.
void for_each_weak_composition(int n, int l, const std::function<void(std::span<const int>, int)>& visit)
{
    std::vector<int> parts(l);
    std::function<void(int, int)> go = [&](int idx, int left) {
        if (idx == l) {
            visit(parts, left);
            return;
        }
        for (int i = 0; i <= left; ++i) {
            parts[idx] = i;
            go(idx + 1, left - i);
        }
    };
    go(0, n);
}

} // namespace

BigInt d_count(int n, int r)
{
    require_non_negative(n);
    require_sign_bound(r);
    BigInt total = 0;
    for (int j = 0; j <= n; ++j) {
        const BigInt c = binomial(n, j);
        total += factorial(j) * power(r - 1, j) * c * c;
    }
    return total;
}

std::vector<BigInt> d_count_table(int nmax, int r)
{
    std::vector<BigInt> table;
    for (int n = 0; n <= nmax; ++n)
        table.push_back(d_count(n, r));
    return table;
}

BigInt length1_count(int n, int r, int a)
{
    require_non_negative(n);
    require_sign_bound(r);
    if (a < 1 || a > r)
        throw DomainError("sign " + std::to_string(a) + " outside 1.." + std::to_string(r));
    return factorial(n) * power(r - 1, n);
}

BigInt homogeneous_count(int n, int r, std::span<const PlainPattern> patterns, int u)
{
    require_non_negative(n);
    require_sign_bound(r);
    if (u < 1 || u > r)
        throw DomainError("sign " + std::to_string(u) + " outside 1.." + std::to_string(r));
    for (const auto& p : patterns)
        validate_plain(p);
    const auto avoiders = plain_avoider_table(n, patterns);
    BigInt total = 0;
    for (int j = 0; j <= n; ++j) {
        const BigInt c = binomial(n, j);
        total += c * c * avoiders[j] * factorial(n - j) * power(r - 1, n - j);
    }
    return total;
}

BigInt full_closure_count(int n, int r, const PlainPattern& tau)
{
    require_non_negative(n);
    require_sign_bound(r);
    validate_plain(tau);
    const PlainPattern patterns[] = {tau};
    return power(r, n) * count_plain_avoiders(n, patterns);
}

std::vector<BigInt> chain_count_table(int nmax, int r, int l)
{
    require_non_negative(nmax);
    if (l < 1 || l > r)
        throw DomainError("chain length l=" + std::to_string(l) + " outside 1..r=" + std::to_string(r));
    std::vector<BigInt> p{1};
    for (int n = 1; n <= nmax; ++n) {
        BigInt value = BigInt(r - 1) * n * p[n - 1];
        for (int i = 1; i <= n; ++i)
            value += binomial(n - 1, i - 1) * factorial(n - i) * power(r - l, n - i) * p[i - 1];
        p.push_back(std::move(value));
    }
    return p;
}

BigInt chain_count_rec(int n, int r, int l)
{
    return chain_count_table(n, r, l).back();
}

BigInt chain_full_count(int n, int r)
{
    require_non_negative(n);
    require_sign_bound(r);
    BigInt product = 1;
    for (int j = 0; j <= n; ++j)
        product *= BigInt(j) * (r - 1) + 1;
    return product;
}

GoodSetSpec::GoodSetSpec(std::vector<GoodComponent> components, int sign_bound)
    : components_(std::move(components)), sign_bound_(sign_bound)
{
    require_sign_bound(sign_bound_);
    if (components_.size() > static_cast<std::size_t>(sign_bound_))
        throw DomainError("good set has " + std::to_string(components_.size()) + " components but only "
                          + std::to_string(sign_bound_) + " signs");
    std::set<int> signs;
    for (const auto& c : components_) {
        if (c.sign < 1 || c.sign > sign_bound_)
            throw ValidationError("component sign " + std::to_string(c.sign) + " outside 1.."
                                  + std::to_string(sign_bound_));
        if (!signs.insert(c.sign).second)
            throw ValidationError("component sign " + std::to_string(c.sign) + " used twice");
        for (const auto& p : c.patterns)
            validate_plain(p);
    }
}

PatternSet GoodSetSpec::to_pattern_set() const
{
    std::vector<SignedPattern> patterns;
    for (const auto& c : components_)
        for (const auto& p : c.patterns)
            patterns.emplace_back(p, std::vector<int>(p.size(), c.sign), sign_bound_);
    return PatternSet(std::move(patterns), sign_bound_);
}

BigInt good_set_count(int n, const GoodSetSpec& spec)
{
    require_non_negative(n);
    const auto comps = spec.components();
    const int p = static_cast<int>(comps.size());
    std::vector<std::vector<BigInt>> avoiders;
    for (const auto& c : comps)
        avoiders.push_back(plain_avoider_table(n, c.patterns));

    // memo[idx][m]: count on m symbols after peeling components 0..idx-1
    std::vector<std::vector<BigInt>> memo(p + 1, std::vector<BigInt>(n + 1));
    std::vector<std::vector<bool>> known(p + 1, std::vector<bool>(n + 1, false));
    std::function<BigInt(int, int)> f = [&](int idx, int m) -> BigInt {
        if (known[idx][m])
            return memo[idx][m];
        const int signs_left = spec.sign_bound() - idx;
        BigInt value;
        if (idx == p) {
            value = factorial(m) * power(signs_left, m);
        } else {
            for (int j = 0; j <= m; ++j) {
                if (avoiders[idx][j] == 0)
                    continue;
                const BigInt c = binomial(m, j);
                value += c * c * avoiders[idx][j] * f(idx + 1, m - j);
            }
        }
        known[idx][m] = true;
        return memo[idx][m] = value;
    };
    return f(0, n);
}

BigInt multi_line_count(int n, int r, int l)
{
    require_non_negative(n);
    require_sign_bound(r);
    if (l < 0 || l > r)
        throw DomainError("line count l=" + std::to_string(l) + " outside 0..r=" + std::to_string(r));
    const BigInt n_fact = factorial(n);
    BigInt total = 0;
    for_each_weak_composition(n, l, [&](std::span<const int> parts, int rest) {
        BigInt denom = factorial(rest);
        for (int i : parts)
            denom *= factorial(i);
        const BigInt multinomial = n_fact / denom;
        total += multinomial * multinomial * factorial(rest) * power(r - l, rest);
    });
    return total;
}

BigInt case1_count(int n, int r)
{
    require_non_negative(n);
    require_sign_bound(r);
    if (n == 0)
        return 1;
    return factorial(n) * (n + r - 1) * power(r - 1, n - 1);
}

std::vector<BigInt> case3_count_table(int nmax, int r)
{
    require_non_negative(nmax);
    if (r < 3)
        throw DomainError("case 3 recurrence needs r >= 3");
    const auto d = d_count_table(nmax, r - 1);
    std::vector<BigInt> p{1};
    for (int n = 1; n <= nmax; ++n) {
        BigInt value = BigInt(n) * (r - 1) * p[n - 1];
        for (int i = 1; i <= n; ++i)
            value += binomial(n - 1, i - 1) * d[n - i] * d[i - 1];
        p.push_back(std::move(value));
    }
    return p;
}

BigInt case3_count_rec(int n, int r)
{
    return case3_count_table(n, r).back();
}

std::vector<BigInt> case4_count_table(int nmax, int r)
{
    require_non_negative(nmax);
    if (r < 2)
        throw DomainError("case 4 recurrence needs r >= 2");
    const auto d = d_count_table(nmax, r - 1);
    std::vector<BigInt> p{1};
    for (int n = 1; n <= nmax; ++n) {
        BigInt value = BigInt(n) * (r - 1) * p[n - 1];
        for (int i = 1; i <= n; ++i)
            value += binomial(n - 1, i - 1) * factorial(n - i) * power(r - 1, n - i) * d[i - 1];
        p.push_back(std::move(value));
    }
    return p;
}

BigInt case4_count_rec(int n, int r)
{
    return case4_count_table(n, r).back();
}

IdentityResult identity_check(int n, int r, int l)
{
    require_non_negative(n);
    if (l < 1)
        throw DomainError("identity needs l >= 1");
    if (r < 2 * l)
        throw DomainError("identity needs r >= 2l, got r=" + std::to_string(r) + ", l=" + std::to_string(l));
    const auto d2 = d_count_table(n, 2);
    IdentityResult result;
    for_each_weak_composition(n, l, [&](std::span<const int> parts, int rest) {
        BigInt denom = factorial(rest);
        BigInt d_product = 1;
        for (int i : parts) {
            const BigInt f = factorial(i);
            denom *= f * f;
            d_product *= d2[i];
        }
        result.lhs += Rational(power(r - l, rest), denom);
        result.rhs += Rational(power(r - 2 * l, rest) * d_product, denom);
    });
    result.equal = result.lhs == result.rhs;
    return result;
}

} // namespace signedpat
