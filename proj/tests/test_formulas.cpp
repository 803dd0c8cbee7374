#include "signedpat/enumerate.hpp"
#include "signedpat/formulas.hpp"
#include "signedpat/series.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace signedpat;
using namespace signedpat::testing;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) { return {values.begin(), values.end()}; }

SignedPattern decorate(const PlainPattern& tau, std::vector<int> signs, int r)
{
    return SignedPattern(tau, std::move(signs), r);
}

/// Every sign decoration of tau over r signs.
PatternSet closure(const PlainPattern& tau, int r)
{
    const int k = static_cast<int>(tau.size());
    std::vector<SignedPattern> out;
    std::vector<int> signs(k, 1);
    while (true) {
        out.push_back(decorate(tau, signs, r));
        int i = 0;
        while (i < k && signs[i] == r)
            signs[i++] = 1;
        if (i == k)
            break;
        ++signs[i];
    }
    return PatternSet(std::move(out), r);
}

BigInt oracle(int n, int r, const PatternSet& t) { return BigInt(unpruned_count(n, r, t)); }

BigInt central_binomial(int n) { return binomial(2 * n, n); }

const std::vector<PlainPattern> kS2{{1, 2}, {2, 1}};
const std::vector<PlainPattern> kS3{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};

} // namespace

TEST_CASE("d_count: worked examples")
{
    CHECK(d_count(2, 2) == 7);
    for (int r = 1; r <= 6; ++r)
        CHECK(d_count(0, r) == 1);
    CHECK(d_count_table(5, 2) == big({1, 2, 7, 34, 209, 1546}));
    CHECK(d_count(3, 5) == 709);
}

TEST_CASE("d_count equals brute force for every single 2-letter pattern")
{
    for (int r = 1; r <= 3; ++r)
        for (const auto& symbols : kS2)
            for (int a = 1; a <= r; ++a)
                for (int b = 1; b <= r; ++b) {
                    const PatternSet t({decorate(symbols, {a, b}, r)}, r);
                    for (int n = 0; n <= 4; ++n)
                        CHECK(d_count(n, r) == oracle(n, r, t));
                }
}

TEST_CASE("d_count is increasing in r")
{
    for (int n = 1; n <= 8; ++n)
        for (int r = 1; r < 7; ++r)
            CHECK(d_count(n, r) < d_count(n, r + 1));
}

TEST_CASE("length1_count")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(length1_count(n, 1, 1) == 0);
    CHECK(length1_count(0, 4, 2) == 1);
    CHECK(length1_count(3, 3, 1) == 48);
    for (int r = 1; r <= 3; ++r)
        for (int a = 1; a <= r; ++a)
            for (int n = 0; n <= 4; ++n)
                CHECK(length1_count(n, r, a) == oracle(n, r, PatternSet({SignedPattern({1}, {a}, r)}, r)));
    CHECK_THROWS_AS(length1_count(3, 2, 3), DomainError);
}

TEST_CASE("homogeneous_count")
{
    const std::vector<PlainPattern> both{{1, 2}, {2, 1}};
    for (int n = 0; n <= 7; ++n)
        CHECK(homogeneous_count(n, 2, both, 1) == factorial(n + 1));

    const std::vector<PlainPattern> inc{{1, 2}};
    for (int r = 1; r <= 4; ++r)
        for (int u = 1; u <= r; ++u)
            for (int n = 0; n <= 6; ++n)
                CHECK(homogeneous_count(n, r, inc, u) == d_count(n, r));

    const std::vector<PlainPattern> p123{{1, 2, 3}};
    const PatternSet t({decorate({1, 2, 3}, {1, 1, 1}, 2)}, 2);
    for (int n = 0; n <= 4; ++n)
        CHECK(homogeneous_count(n, 2, p123, 1) == oracle(n, 2, t));

    const std::vector<PlainPattern> mixed{{2, 1}, {1, 3, 2}};
    const PatternSet tm({decorate({2, 1}, {2, 2}, 3), decorate({1, 3, 2}, {2, 2, 2}, 3)}, 3);
    for (int n = 0; n <= 4; ++n)
        CHECK(homogeneous_count(n, 3, mixed, 2) == oracle(n, 3, tm));

    CHECK_THROWS_AS(homogeneous_count(2, 2, inc, 3), DomainError);
}

TEST_CASE("full_closure_count")
{
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 6; ++n)
            CHECK(full_closure_count(n, r, {1, 2}) == power(r, n));
    CHECK(full_closure_count(0, 3, {1, 2, 3}) == 1);
    CHECK(full_closure_count(4, 2, {1, 2, 3}) == 224);
    CHECK(oracle(4, 2, closure({1, 2, 3}, 2)) == 224);
    for (int n = 0; n <= 4; ++n)
        CHECK(full_closure_count(n, 3, {2, 1}) == oracle(n, 3, closure({2, 1}, 3)));
}

TEST_CASE("chain_count_rec: worked examples")
{
    for (int n = 0; n <= 8; ++n)
        CHECK(chain_count_rec(n, 2, 2) == factorial(n + 1));
    for (int r = 1; r <= 5; ++r) {
        BigInt prod = 1;
        for (int n = 0; n <= 8; ++n) {
            prod *= n * (r - 1) + 1;
            CHECK(chain_count_rec(n, r, r) == prod);
            CHECK(chain_full_count(n, r) == prod);
        }
    }
    for (int n = 0; n <= 8; ++n)
        CHECK(chain_count_rec(n, 3, 1) == d_count(n, 3));
    CHECK_THROWS_AS(chain_count_rec(2, 2, 3), DomainError);
    CHECK_THROWS_AS(chain_count_rec(2, 2, 0), DomainError);
}

TEST_CASE("chain_count_rec equals brute force for every admissible sign choice")
{
    for (int r = 1; r <= 3; ++r)
        for (int l = 1; l <= r; ++l)
            for (int b = 1; b <= r; ++b) {
                // a_1 .. a_l: the first l signs after rotating by b
                std::vector<SignedPattern> inc;
                std::vector<SignedPattern> dec;
                for (int j = 0; j < l; ++j) {
                    const int a = (b - 1 + j) % r + 1;
                    inc.push_back(up(b, a, r));
                    dec.push_back(down(a, b, r));
                }
                const PatternSet ti(inc, r);
                const PatternSet td(dec, r);
                for (int n = 0; n <= 4; ++n) {
                    CHECK(chain_count_rec(n, r, l) == oracle(n, r, ti));
                    CHECK(chain_count_rec(n, r, l) == oracle(n, r, td));
                }
            }
}

TEST_CASE("good sets: validation")
{
    CHECK_THROWS_AS(GoodSetSpec({{kS2, 1}, {kS2, 2}, {kS2, 3}}, 2), DomainError);
    CHECK_THROWS_AS(GoodSetSpec({{kS2, 1}, {kS2, 1}}, 2), ValidationError);
    CHECK_THROWS_AS(GoodSetSpec({{kS2, 4}}, 3), ValidationError);
    const GoodSetSpec spec({{{{1, 2}}, 1}, {{{2, 1}}, 2}}, 3);
    CHECK(spec.to_pattern_set() == PatternSet({up(1, 1, 3), down(2, 2, 3)}, 3));
}

TEST_CASE("good_set_count: worked examples")
{
    for (const auto& beta : kS2)
        for (const auto& gamma : kS2) {
            const GoodSetSpec spec({{{beta}, 1}, {{gamma}, 2}}, 2);
            for (int n = 0; n <= 8; ++n)
                CHECK(good_set_count(n, spec) == central_binomial(n));
        }
    CHECK(good_set_count(3, GoodSetSpec({{{{1, 2}}, 1}, {{{2, 1}}, 2}}, 2)) == 20);

    const std::vector<PlainPattern> t1{{1, 3, 2}, {2, 1}};
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 6; ++n)
            CHECK(good_set_count(n, GoodSetSpec({{t1, 1}}, r)) == homogeneous_count(n, r, t1, 1));

    const GoodSetSpec spec({{{{1, 2}}, 1}, {{{2, 1}}, 2}}, 3);
    for (int n = 0; n <= 4; ++n)
        CHECK(good_set_count(n, spec) == oracle(n, 3, spec.to_pattern_set()));
}

TEST_CASE("good_set_count equals brute force on random specs")
{
    std::mt19937 rng(1009);
    std::vector<PlainPattern> pool(kS2);
    pool.insert(pool.end(), kS3.begin(), kS3.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
        const int r = 1 + trial % 3;
        const int p = std::min(r, 1 + trial % 2);
        std::vector<int> signs(r);
        std::iota(signs.begin(), signs.end(), 1);
        std::shuffle(signs.begin(), signs.end(), rng);
        std::vector<GoodComponent> components;
        for (int c = 0; c < p; ++c) {
            std::vector<PlainPattern> patterns{pool[pick(rng)]};
            if (rng() % 2)
                patterns.push_back(pool[pick(rng)]);
            std::sort(patterns.begin(), patterns.end());
            patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
            components.push_back({patterns, signs[c]});
        }
        const GoodSetSpec spec(components, r);
        const auto t = spec.to_pattern_set();
        for (int n = 0; n <= 4; ++n)
            CHECK(good_set_count(n, spec) == oracle(n, r, t));
    }
}

TEST_CASE("multi_line_count")
{
    CHECK(multi_line_count(3, 5, 2) == 668);
    for (int n = 0; n <= 5; ++n) {
        CHECK(multi_line_count(n, 3, 0) == factorial(n) * power(3, n));
        CHECK(multi_line_count(n, 2, 2) == central_binomial(n));
    }
    CHECK_THROWS_AS(multi_line_count(2, 2, 3), DomainError);

    // lines on distinct signs, mixed directions
    for (int r = 1; r <= 3; ++r)
        for (int l = 1; l <= r; ++l) {
            std::vector<SignedPattern> lines;
            for (int u = 1; u <= l; ++u)
                lines.push_back(u % 2 ? up(u, u, r) : down(u, u, r));
            const PatternSet t(lines, r);
            for (int n = 0; n <= 4; ++n)
                CHECK(multi_line_count(n, r, l) == oracle(n, r, t));
        }
}

TEST_CASE("case1_count")
{
    CHECK(case1_count(0, 5) == 1);
    for (int n = 0; n <= 5; ++n)
        CHECK(case1_count(n, 5) == big({1, 5, 48, 672, 12288, 276480})[n]);
    for (int n = 0; n <= 8; ++n)
        CHECK(case1_count(n, 2) == factorial(n + 1));

    const int r = 3;
    const std::vector<PatternSet> sets{
        PatternSet({up(1, 1, r), down(1, 1, r)}, r), PatternSet({up(1, 1, r), up(1, 2, r)}, r),
        PatternSet({up(1, 2, r), down(1, 2, r)}, r), PatternSet({up(1, 2, r), down(2, 1, r)}, r),
        PatternSet({up(1, 2, r), up(1, 3, r)}, r)};
    for (const auto& t : sets)
        for (int n = 0; n <= 4; ++n)
            CHECK(case1_count(n, r) == oracle(n, r, t));
    // (i) holds from r = 1
    for (int n = 0; n <= 5; ++n)
        CHECK(case1_count(n, 1) == oracle(n, 1, PatternSet({up(1, 1, 1), down(1, 1, 1)}, 1)));
}

TEST_CASE("the four case-2 families all follow multi_line_count(n, r, 2)")
{
    for (int r = 4; r <= 5; ++r) {
        std::vector<PatternSet> sets;
        for (int a = 2; a <= r; ++a)
            for (int b = a; b <= r; ++b) {
                sets.push_back(PatternSet({up(1, 1, r), up(a, b, r)}, r));
                sets.push_back(PatternSet({up(1, 1, r), down(a, b, r)}, r));
            }
        sets.push_back(PatternSet({up(1, 2, r), up(3, 4, r)}, r));
        sets.push_back(PatternSet({up(1, 2, r), down(3, 4, r)}, r));
        for (const auto& t : sets)
            for (int n = 0; n <= 4; ++n)
                CHECK(multi_line_count(n, r, 2) == oracle(n, r, t));
    }
}

TEST_CASE("case 3 and case 4 recurrences")
{
    CHECK(case3_count_table(5, 5) == big({1, 5, 48, 670, 12168, 270856}));
    CHECK(case4_count_table(5, 5) == big({1, 5, 48, 671, 12228, 273665}));
    for (int r = 3; r <= 6; ++r)
        CHECK(case3_count_rec(1, r) == r);
    for (int r = 2; r <= 6; ++r)
        CHECK(case4_count_rec(1, r) == r);
    for (int n = 3; n <= 5; ++n) {
        CHECK(factorial(n) < case4_count_rec(n, 2));
        CHECK(case4_count_rec(n, 2) < factorial(n + 1));
    }
    CHECK_THROWS_AS(case3_count_rec(2, 2), DomainError);
    CHECK_THROWS_AS(case4_count_rec(2, 1), DomainError);
}

TEST_CASE("case 3 and case 4 equal brute force")
{
    for (int r = 3; r <= 4; ++r) {
        const std::vector<PatternSet> case3{PatternSet({up(1, 2, r), down(1, 3, r)}, r),
                                            PatternSet({up(1, 2, r), down(2, 3, r)}, r),
                                            PatternSet({up(1, 2, r), down(3, 1, r)}, r)};
        for (const auto& t : case3)
            for (int n = 0; n <= 4; ++n)
                CHECK(case3_count_rec(n, r) == oracle(n, r, t));
    }
    for (int r = 2; r <= 4; ++r) {
        const PatternSet t({up(1, 1, r), down(1, 2, r)}, r);
        for (int n = 0; n <= 4; ++n)
            CHECK(case4_count_rec(n, r) == oracle(n, r, t));
    }
    // the r = 5, n = 4 value: 12228
    CHECK(oracle(4, 5, PatternSet({up(1, 1, 5), down(1, 2, 5)}, 5)) == 12228);
}

TEST_CASE("recurrences agree with their series")
{
    for (int r = 1; r <= 6; ++r) {
        for (int l = 1; l <= r; ++l)
            CHECK(chain_count_table(12, r, l) == egf_to_counts(egf_chain(r, l, 12), 12));
        if (r >= 2)
            CHECK(case4_count_table(12, r) == egf_to_counts(egf_case4(r, 12), 12));
        if (r >= 3)
            CHECK(case3_count_table(12, r) == egf_to_counts(egf_case3(r, 12), 12));
    }
}

TEST_CASE("identity_check")
{
    const auto zero = identity_check(0, 3, 1);
    CHECK(zero.lhs == 1);
    CHECK(zero.rhs == 1);
    CHECK(zero.equal);

    // l = 1, r = 3 written out term by term
    for (int n = 0; n <= 8; ++n) {
        Rational lhs = 0;
        Rational rhs = 0;
        for (int i = 0; i <= n; ++i) {
            lhs += Rational(power(2, n - i), factorial(i) * factorial(i) * factorial(n - i));
            for (int j = 0; j <= i; ++j)
                rhs += Rational(1, factorial(j) * factorial(i - j) * factorial(i - j) * factorial(n - i));
        }
        const auto result = identity_check(n, 3, 1);
        CHECK(result.lhs == lhs);
        CHECK(result.rhs == rhs);
        CHECK(result.equal);
    }

    for (int l = 1; l <= 2; ++l)
        for (int r = 2 * l; r <= 6; ++r)
            for (int n = 0; n <= 10; ++n)
                CHECK(identity_check(n, r, l).equal);

    CHECK_THROWS_AS(identity_check(3, 3, 2), DomainError);
}
