#include "signedpat/registry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace signedpat {

namespace {

SignedPattern two_letter(int first, int first_sign, int second, int second_sign, int r)
{
    return SignedPattern({first, second}, {first_sign, second_sign}, r);
}

// 1^a 2^b as "12" with signs (a, b); "21" likewise.
SignedPattern up(int a, int b, int r) { return two_letter(1, a, 2, b, r); }
SignedPattern down(int a, int b, int r) { return two_letter(2, a, 1, b, r); }

struct PairFamilyTable {
    std::vector<std::pair<PatternSet, Family>> canonical;
};

// The listed representatives of every pair family, in canonical form.
PairFamilyTable build_pair_table(int r)
{
    std::vector<std::pair<std::vector<SignedPattern>, Family>> reps;
    auto add = [&](int min_r, Family f, std::vector<SignedPattern> (*make)(int)) {
        if (r >= min_r)
            reps.emplace_back(make(r), f);
    };
    add(1, Family::Case1, [](int r) { return std::vector{up(1, 1, r), down(1, 1, r)}; });
    add(2, Family::Case1, [](int r) { return std::vector{up(1, 1, r), up(1, 2, r)}; });
    add(2, Family::Case1, [](int r) { return std::vector{up(1, 2, r), down(1, 2, r)}; });
    add(2, Family::Case1, [](int r) { return std::vector{up(1, 2, r), down(2, 1, r)}; });
    add(3, Family::Case1, [](int r) { return std::vector{up(1, 2, r), up(1, 3, r)}; });

    add(2, Family::Case2, [](int r) { return std::vector{up(1, 1, r), up(2, 2, r)}; });
    add(3, Family::Case2, [](int r) { return std::vector{up(1, 1, r), up(2, 3, r)}; });
    add(2, Family::Case2, [](int r) { return std::vector{up(1, 1, r), down(2, 2, r)}; });
    add(3, Family::Case2, [](int r) { return std::vector{up(1, 1, r), down(2, 3, r)}; });
    add(4, Family::Case2, [](int r) { return std::vector{up(1, 2, r), up(3, 4, r)}; });
    add(4, Family::Case2, [](int r) { return std::vector{up(1, 2, r), down(3, 4, r)}; });

    add(3, Family::Case3, [](int r) { return std::vector{up(1, 2, r), down(1, 3, r)}; });
    add(3, Family::Case3, [](int r) { return std::vector{up(1, 2, r), down(2, 3, r)}; });
    add(3, Family::Case3, [](int r) { return std::vector{up(1, 2, r), down(3, 1, r)}; });

    add(2, Family::Case4, [](int r) { return std::vector{up(1, 1, r), down(1, 2, r)}; });

    PairFamilyTable table;
    for (auto& [patterns, family] : reps)
        table.canonical.emplace_back(canonical_form(PatternSet(std::move(patterns), r)), family);
    return table;
}

const PairFamilyTable& pair_table(int r)
{
    static std::mutex mutex;
    static std::map<int, PairFamilyTable> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(r);
    if (it == cache.end())
        it = cache.emplace(r, build_pair_table(r)).first;
    return it->second;
}

// {(1^1,2^j) : j in first..first+l-1}
PatternSet chain_representative(int first, int l, int r)
{
    std::vector<SignedPattern> patterns;
    for (int j = first; j < first + l; ++j)
        patterns.push_back(up(1, j, r));
    return PatternSet(std::move(patterns), r);
}

// Chain sets {(1^b,2^a_j)}: as canonical forms, either b is one of the a_j
// or not; for fixed l those are the only two orbits.
std::optional<int> chain_length(const PatternSet& canon, int r)
{
    const int l = static_cast<int>(canon.size());
    if (l < 2 || l > r)
        return std::nullopt;
    if (canonical_form(chain_representative(1, l, r)) == canon)
        return l;
    if (l + 1 <= r && canonical_form(chain_representative(2, l, r)) == canon)
        return l;
    return std::nullopt;
}

bool is_full_closure(const PatternSet& patterns, int r, PlainPattern& tau)
{
    if (patterns.empty())
        return false;
    auto first = patterns.patterns().front().symbols();
    const std::size_t k = first.size();
    BigInt expected = power(r, static_cast<unsigned>(k));
    if (BigInt(patterns.size()) != expected)
        return false;
    for (const auto& p : patterns)
        if (!std::equal(p.symbols().begin(), p.symbols().end(), first.begin(), first.end()))
            return false;
    tau.assign(first.begin(), first.end());
    return true;
}

std::optional<GoodSetSpec> as_good_set(const PatternSet& patterns, int r)
{
    std::map<int, std::vector<PlainPattern>> by_sign;
    for (const auto& p : patterns) {
        if (!p.is_homogeneous())
            return std::nullopt;
        by_sign[p.signs()[0]].emplace_back(p.symbols().begin(), p.symbols().end());
    }
    std::vector<GoodComponent> components;
    for (auto& [sign, plain] : by_sign)
        components.push_back({std::move(plain), sign});
    return GoodSetSpec(std::move(components), r);
}

std::vector<BigInt> per_n(int nmax, const std::function<BigInt(int)>& f)
{
    std::vector<BigInt> out;
    out.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n)
        out.push_back(f(n));
    return out;
}

std::vector<BigInt> from_series(int nmax, const std::function<PowerSeries(int)>& egf)
{
    return egf_to_counts(egf(std::max(nmax, 0)), nmax);
}

} // namespace

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::Brute: return "brute";
    case Method::Formula: return "formula";
    case Method::Recurrence: return "recurrence";
    case Method::Series: return "series";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::Brute, Method::Formula, Method::Recurrence, Method::Series})
        if (to_string(m) == name)
            return m;
    throw ValidationError("unknown method '" + std::string(name) + "' (expected brute|formula|recurrence|series)");
}

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::Empty: return "empty";
    case Family::Length1: return "length-1";
    case Family::SingleTwoLetter: return "single 2-letter";
    case Family::Chain: return "chain";
    case Family::Case1: return "case 1";
    case Family::Case2: return "case 2";
    case Family::Case3: return "case 3";
    case Family::Case4: return "case 4";
    case Family::Lines: return "lines";
    case Family::GoodSet: return "good set";
    case Family::FullClosure: return "full closure";
    case Family::Unregistered: return "unregistered";
    }
    return "?";
}

bool FamilyMatch::supports(Method m) const
{
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

FamilyMatch identify_family(const PatternSet& input, int r)
{
    if (input.sign_bound() > r)
        throw ValidationError("pattern set sign bound exceeds r=" + std::to_string(r));
    const PatternSet patterns = input.with_sign_bound(r);
    FamilyMatch match;
    auto with = [&](Family f, std::initializer_list<Method> extra) {
        match.family = f;
        match.methods.insert(match.methods.end(), extra);
        return match;
    };

    if (patterns.empty())
        return with(Family::Empty, {Method::Formula});

    const auto& first = patterns.patterns().front();
    if (patterns.size() == 1 && first.size() == 1) {
        match.parameter = first.signs()[0];
        return with(Family::Length1, {Method::Formula});
    }
    if (patterns.size() == 1 && first.size() == 2)
        return with(Family::SingleTwoLetter, {Method::Formula, Method::Recurrence, Method::Series});

    const bool all_two_letter = std::all_of(patterns.begin(), patterns.end(),
                                            [](const SignedPattern& p) { return p.size() == 2; });
    if (all_two_letter && r <= kMaxGroupSignBound) {
        const PatternSet canon = canonical_form(patterns);
        for (const auto& [rep, family] : pair_table(r).canonical) {
            if (rep != canon)
                continue;
            switch (family) {
            case Family::Case1:
                if (r >= 2)
                    return with(family, {Method::Formula, Method::Recurrence, Method::Series});
                return with(family, {Method::Formula});
            case Family::Case2:
                return with(family, {Method::Formula});
            default:
                return with(family, {Method::Recurrence, Method::Series});
            }
        }
        if (auto l = chain_length(canon, r)) {
            match.parameter = *l;
            if (*l == r)
                return with(Family::Chain, {Method::Formula, Method::Recurrence, Method::Series});
            return with(Family::Chain, {Method::Recurrence, Method::Series});
        }
    }

    if (is_full_closure(patterns, r, match.closure_pattern))
        return with(Family::FullClosure, {Method::Formula});

    if (auto good = as_good_set(patterns, r)) {
        const auto comps = good->components();
        const bool lines = std::all_of(comps.begin(), comps.end(), [](const GoodComponent& c) {
            return c.patterns.size() == 1 && c.patterns.front().size() == 2;
        });
        if (lines) {
            match.parameter = static_cast<int>(comps.size());
            return with(Family::Lines, {Method::Formula});
        }
        match.good_set = std::move(good);
        return with(Family::GoodSet, {Method::Formula});
    }

    return match;
}

std::vector<BigInt> count_sequence(int nmax, int r, const PatternSet& patterns, Method method,
                                   const SearchLimits& limits)
{
    if (nmax < 0)
        throw ValidationError("n must be non-negative");
    if (method == Method::Brute)
        return fingerprint(patterns, r, nmax, limits).counts;

    const FamilyMatch match = identify_family(patterns, r);
    if (!match.supports(method))
        throw ValidationError("method '" + std::string(to_string(method)) + "' is not available for the "
                              + std::string(to_string(match.family)) + " family of {" + patterns.to_string() + "}");

    const int l = match.parameter;
    switch (match.family) {
    case Family::Empty:
        return per_n(nmax, [&](int n) { return factorial(n) * power(r, n); });
    case Family::Length1:
        return per_n(nmax, [&](int n) { return length1_count(n, r, l); });
    case Family::SingleTwoLetter:
        if (method == Method::Formula)
            return per_n(nmax, [&](int n) { return d_count(n, r); });
        if (method == Method::Recurrence)
            return chain_count_table(nmax, r, 1);
        return from_series(nmax, [&](int order) { return egf_d(r, order); });
    case Family::Chain:
        if (method == Method::Formula)
            return per_n(nmax, [&](int n) { return chain_full_count(n, r); });
        if (method == Method::Recurrence)
            return chain_count_table(nmax, r, l);
        return from_series(nmax, [&](int order) { return egf_chain(r, l, order); });
    case Family::Case1:
        if (method == Method::Formula)
            return per_n(nmax, [&](int n) { return case1_count(n, r); });
        if (method == Method::Recurrence)
            return chain_count_table(nmax, r, 2);
        return from_series(nmax, [&](int order) { return egf_chain(r, 2, order); });
    case Family::Case2:
        return per_n(nmax, [&](int n) { return multi_line_count(n, r, 2); });
    case Family::Case3:
        if (method == Method::Recurrence)
            return case3_count_table(nmax, r);
        return from_series(nmax, [&](int order) { return egf_case3(r, order); });
    case Family::Case4:
        if (method == Method::Recurrence)
            return case4_count_table(nmax, r);
        return from_series(nmax, [&](int order) { return egf_case4(r, order); });
    case Family::Lines:
        return per_n(nmax, [&](int n) { return multi_line_count(n, r, l); });
    case Family::GoodSet:
        return per_n(nmax, [&](int n) { return good_set_count(n, *match.good_set); });
    case Family::FullClosure:
        return per_n(nmax, [&](int n) { return full_closure_count(n, r, match.closure_pattern); });
    case Family::Unregistered:
        break;
    }
    throw ValidationError("no counting method besides brute force for {" + patterns.to_string() + "}");
}

BigInt count(int n, int r, const PatternSet& patterns, Method method, const SearchLimits& limits)
{
    if (method == Method::Brute)
        return count_avoiders(n, r, patterns, limits);
    return count_sequence(n, r, patterns, method, limits).back();
}

} // namespace signedpat
