#include "signedpat/wilf.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace signedpat {

namespace {

SignedPattern up(int a, int b) { return SignedPattern({1, 2}, {a, b}, kTableSignBound); }
SignedPattern down(int a, int b) { return SignedPattern({2, 1}, {a, b}, kTableSignBound); }

Table1Entry entry(int row, SignedPattern first, SignedPattern second, std::vector<BigInt> expected)
{
    return {row, PatternSet({std::move(first), std::move(second)}, kTableSignBound), std::move(expected)};
}

std::vector<Table1Entry> build_table1()
{
    const std::vector<BigInt> case1{1, 5, 48, 672, 12288, 276480};
    const std::vector<BigInt> case2{1, 5, 48, 668, 12046, 265062};
    const std::vector<BigInt> case3{1, 5, 48, 670, 12168, 270856};
    return {
        entry(1, up(1, 1), down(1, 1), case1),
        entry(2, up(1, 1), up(1, 2), case1),
        entry(3, up(1, 2), down(1, 2), case1),
        entry(4, up(1, 2), down(2, 1), case1),
        entry(5, up(1, 2), up(1, 3), case1),
        entry(6, up(1, 1), up(2, 2), case2),
        entry(7, up(1, 1), down(2, 2), case2),
        entry(8, up(1, 1), up(2, 3), case2),
        entry(9, up(1, 1), down(2, 3), case2),
        entry(10, up(1, 2), up(3, 4), case2),
        entry(11, up(1, 2), down(3, 4), case2),
        entry(12, up(1, 2), down(1, 3), case3),
        entry(13, up(1, 2), down(2, 3), case3),
        entry(14, up(1, 2), down(3, 1), case3),
        // n = 4 is stored as 12288; the search, recurrence and series all give 12228
        entry(15, up(1, 1), down(1, 2), {1, 5, 48, 671, 12288, 273665}),
        entry(16, up(1, 2), up(2, 3), {1, 5, 48, 669, 12106, 267867}),
        entry(17, up(1, 2), up(2, 1), {1, 5, 48, 670, 12166, 270672}),
    };
}

} // namespace

std::vector<SignedPattern> two_letter_patterns(int r)
{
    std::vector<SignedPattern> patterns;
    for (const auto& symbols : {std::vector<int>{1, 2}, std::vector<int>{2, 1}})
        for (int a = 1; a <= r; ++a)
            for (int b = 1; b <= r; ++b)
                patterns.emplace_back(symbols, std::vector<int>{a, b}, r);
    std::sort(patterns.begin(), patterns.end());
    return patterns;
}

std::vector<std::vector<std::size_t>> group_by_fingerprint(std::span<const PatternSet> sets, int r, int nmax,
                                                           const SearchLimits& limits)
{
    std::map<std::vector<BigInt>, std::size_t> slot;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto counts = fingerprint(sets[i], r, nmax, limits).counts;
        auto [it, inserted] = slot.emplace(std::move(counts), groups.size());
        if (inserted)
            groups.emplace_back();
        groups[it->second].push_back(i);
    }
    return groups;
}

std::vector<WilfClass> classify_pairs(int r, int nmax, const SearchLimits& limits)
{
    const auto patterns = two_letter_patterns(r);
    std::set<PatternSet> orbits;
    for (std::size_t i = 0; i < patterns.size(); ++i)
        for (std::size_t j = i + 1; j < patterns.size(); ++j)
            orbits.insert(canonical_form(PatternSet({patterns[i], patterns[j]}, r)));

    // orbits is ordered, so each class's first member is its least element
    std::map<std::vector<BigInt>, WilfClass> by_fingerprint;
    for (const auto& canon : orbits) {
        auto fp = fingerprint(canon, r, nmax, limits);
        auto it = by_fingerprint.find(fp.counts);
        if (it == by_fingerprint.end())
            it = by_fingerprint.emplace(fp.counts, WilfClass{canon, {}, fp}).first;
        it->second.members.push_back(canon);
    }

    std::vector<WilfClass> classes;
    for (auto& [counts, cls] : by_fingerprint)
        classes.push_back(std::move(cls));
    std::sort(classes.begin(), classes.end(),
              [](const WilfClass& a, const WilfClass& b) { return a.representative < b.representative; });
    return classes;
}

int wc(int r, int nmax, const SearchLimits& limits)
{
    return static_cast<int>(classify_pairs(r, nmax, limits).size());
}

const std::vector<Table1Entry>& table1_reference()
{
    static const std::vector<Table1Entry> table = build_table1();
    return table;
}

std::vector<Table1Row> table1(int nmax, const SearchLimits& limits)
{
    if (nmax < 0 || nmax > kTableDepth)
        throw ValidationError("reference counts cover n = 0.." + std::to_string(kTableDepth));
    std::vector<Table1Row> rows;
    for (const auto& ref : table1_reference()) {
        Table1Row row{ref.row, ref.pair, {ref.expected.begin(), ref.expected.begin() + nmax + 1}, {}, false};
        row.computed = fingerprint(ref.pair, kTableSignBound, nmax, limits).counts;
        row.match = row.computed == row.expected;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace signedpat
