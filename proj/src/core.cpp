#include "signedpat/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace signedpat {

namespace {

void validate_sign_bound(int sign_bound)
{
    if (sign_bound < 1)
        throw ValidationError("sign bound must be positive, got " + std::to_string(sign_bound));
}

bool is_permutation_of_1_to_n(std::span<const int> values)
{
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

// Backtracking embedding of `pat` into (symbols, signs). Pattern letters
// [0, t) are already placed at pos[0..t); if `fixed_last` is set, letter k-1
// sits at pos[k-1] and only letters [0, k-1) are searched for.
class Embedder {
public:
    Embedder(std::span<const int> symbols, std::span<const int> signs, const SignedPattern& pat)
        : symbols_(symbols), signs_(signs), pat_symbols_(pat.symbols()),
          pat_signs_(pat.signs()), pos_(pat.size())
    {
    }

    bool anywhere() { return place(0, 0, symbols_.size(), pat_symbols_.size()); }

    bool ending_at_last()
    {
        const std::size_t k = pat_symbols_.size();
        const std::size_t last = symbols_.size() - 1;
        if (signs_[last] != pat_signs_[k - 1])
            return false;
        pos_[k - 1] = last;
        fixed_last_ = true;
        return place(0, 0, last, k - 1);
    }

private:
    bool consistent(std::size_t t, std::size_t p) const
    {
        for (std::size_t u = 0; u < t; ++u)
            if ((symbols_[pos_[u]] < symbols_[p]) != (pat_symbols_[u] < pat_symbols_[t]))
                return false;
        if (fixed_last_) {
            const std::size_t k = pat_symbols_.size();
            if ((symbols_[p] < symbols_[pos_[k - 1]]) != (pat_symbols_[t] < pat_symbols_[k - 1]))
                return false;
        }
        return true;
    }

    bool place(std::size_t t, std::size_t start, std::size_t limit, std::size_t count)
    {
        if (t == count)
            return true;
        // leave room for the remaining letters
        const std::size_t remaining = count - t;
        if (limit < remaining)
            return false;
        for (std::size_t p = start; p + remaining <= limit; ++p) {
            if (signs_[p] != pat_signs_[t] || !consistent(t, p))
                continue;
            pos_[t] = p;
            if (place(t + 1, p + 1, limit, count))
                return true;
        }
        return false;
    }

    std::span<const int> symbols_;
    std::span<const int> signs_;
    std::span<const int> pat_symbols_;
    std::span<const int> pat_signs_;
    std::vector<std::size_t> pos_;
    bool fixed_last_ = false;
};

} // namespace

// ---------------------------------------------------------------------------
// SignedPermutation

SignedPermutation::SignedPermutation(std::vector<int> symbols, std::vector<int> signs, int sign_bound)
    : symbols_(std::move(symbols)), signs_(std::move(signs)), sign_bound_(sign_bound)
{
    validate_sign_bound(sign_bound_);
    if (symbols_.size() != signs_.size())
        throw ValidationError("symbols and signs differ in length");
    if (!is_permutation_of_1_to_n(symbols_))
        throw ValidationError("symbols are not a permutation of 1.." + std::to_string(symbols_.size()));
    for (int s : signs_)
        if (s < 1 || s > sign_bound_)
            throw ValidationError("sign " + std::to_string(s) + " outside 1.." + std::to_string(sign_bound_));
}

SignedPermutation SignedPermutation::with_sign_bound(int sign_bound) const
{
    return SignedPermutation(symbols_, signs_, sign_bound);
}

std::string SignedPermutation::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i != 0)
            out += ' ';
        out += std::to_string(symbols_[i]) + '^' + std::to_string(signs_[i]);
    }
    return out;
}

std::strong_ordering SignedPermutation::operator<=>(const SignedPermutation& other) const
{
    if (auto c = symbols_.size() <=> other.symbols_.size(); c != 0)
        return c;
    if (auto c = symbols_ <=> other.symbols_; c != 0)
        return c;
    if (auto c = signs_ <=> other.signs_; c != 0)
        return c;
    return sign_bound_ <=> other.sign_bound_;
}

// ---------------------------------------------------------------------------
// SignedPattern

SignedPattern::SignedPattern(std::vector<int> symbols, std::vector<int> signs, int sign_bound)
    : SignedPattern(SignedPermutation(std::move(symbols), std::move(signs), sign_bound))
{
}

SignedPattern::SignedPattern(SignedPermutation perm) : SignedPermutation(std::move(perm))
{
    if (empty())
        throw ValidationError("a signed pattern must have at least one letter");
}

bool SignedPattern::is_homogeneous() const noexcept
{
    auto s = signs();
    return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

// ---------------------------------------------------------------------------
// PatternSet

PatternSet::PatternSet(int sign_bound) : sign_bound_(sign_bound)
{
    validate_sign_bound(sign_bound_);
}

PatternSet::PatternSet(std::vector<SignedPattern> patterns, int sign_bound)
    : patterns_(std::move(patterns)), sign_bound_(sign_bound)
{
    validate_sign_bound(sign_bound_);
    for (const auto& p : patterns_)
        if (p.sign_bound() != sign_bound_)
            throw ValidationError("pattern " + p.to_string() + " has sign bound "
                                  + std::to_string(p.sign_bound()) + ", set has "
                                  + std::to_string(sign_bound_));
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::with_sign_bound(int sign_bound) const
{
    std::vector<SignedPattern> lifted;
    lifted.reserve(patterns_.size());
    for (const auto& p : patterns_)
        lifted.emplace_back(p.with_sign_bound(sign_bound));
    return PatternSet(std::move(lifted), sign_bound);
}

bool PatternSet::contains_pattern(const SignedPattern& pat) const
{
    return std::binary_search(patterns_.begin(), patterns_.end(), pat);
}

std::string PatternSet::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i != 0)
            out += "; ";
        out += patterns_[i].to_string();
    }
    return out;
}

std::strong_ordering PatternSet::operator<=>(const PatternSet& other) const
{
    if (auto c = patterns_ <=> other.patterns_; c != 0)
        return c;
    return sign_bound_ <=> other.sign_bound_;
}

// ---------------------------------------------------------------------------
// containment

bool contains(const SignedPermutation& perm, const SignedPattern& pat)
{
    if (pat.sign_bound() > perm.sign_bound())
        throw ValidationError("pattern sign bound " + std::to_string(pat.sign_bound())
                              + " exceeds permutation sign bound " + std::to_string(perm.sign_bound()));
    if (pat.size() > perm.size())
        return false;
    return Embedder(perm.symbols(), perm.signs(), pat).anywhere();
}

bool avoids(const SignedPermutation& perm, const PatternSet& patterns)
{
    return std::none_of(patterns.begin(), patterns.end(),
                        [&](const SignedPattern& p) { return contains(perm, p); });
}

bool occurs_ending_at_last(std::span<const int> symbols, std::span<const int> signs,
                           const SignedPattern& pat)
{
    const std::size_t n = symbols.size();
    const std::size_t k = pat.size();
    if (k > n)
        return false;
    const int last_symbol = symbols[n - 1];
    if (signs[n - 1] != pat.signs()[k - 1])
        return false;
    if (k == 1)
        return true;
    if (k == 2) {
        const int first_sign = pat.signs()[0];
        const bool rising = pat.symbols()[0] < pat.symbols()[1];
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (signs[j] == first_sign && (symbols[j] < last_symbol) == rising)
                return true;
        return false;
    }
    return Embedder(symbols, signs, pat).ending_at_last();
}

// ---------------------------------------------------------------------------
// SymmetryElement

SymmetryElement::SymmetryElement(int sign_bound)
{
    validate_sign_bound(sign_bound);
    sign_map_.resize(sign_bound);
    std::iota(sign_map_.begin(), sign_map_.end(), 1);
}

SymmetryElement::SymmetryElement(bool reverse, bool complement, std::vector<int> sign_map)
    : reverse_(reverse), complement_(complement), sign_map_(std::move(sign_map))
{
    if (sign_map_.empty())
        throw ValidationError("sign map must cover at least one sign");
    if (!is_permutation_of_1_to_n(sign_map_))
        throw ValidationError("sign map is not a permutation of 1.." + std::to_string(sign_map_.size()));
}

SymmetryElement SymmetryElement::reversal(int sign_bound)
{
    SymmetryElement g(sign_bound);
    g.reverse_ = true;
    return g;
}

SymmetryElement SymmetryElement::complementation(int sign_bound)
{
    SymmetryElement g(sign_bound);
    g.complement_ = true;
    return g;
}

SymmetryElement SymmetryElement::sign_complement(int sign_bound)
{
    SymmetryElement g(sign_bound);
    std::reverse(g.sign_map_.begin(), g.sign_map_.end());
    return g;
}

SymmetryElement SymmetryElement::relabel(std::vector<int> sign_map)
{
    return SymmetryElement(false, false, std::move(sign_map));
}

bool SymmetryElement::is_identity() const
{
    if (reverse_ || complement_)
        return false;
    for (std::size_t i = 0; i < sign_map_.size(); ++i)
        if (sign_map_[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

SymmetryElement SymmetryElement::compose(const SymmetryElement& other) const
{
    if (other.sign_bound() != sign_bound())
        throw ValidationError("cannot compose symmetries over different sign bounds");
    std::vector<int> map(sign_map_.size());
    for (std::size_t u = 0; u < map.size(); ++u)
        map[u] = sign_map_[other.sign_map_[u] - 1];
    return SymmetryElement(reverse_ != other.reverse_, complement_ != other.complement_, std::move(map));
}

SignedPermutation SymmetryElement::apply(const SignedPermutation& perm) const
{
    if (perm.sign_bound() != sign_bound())
        throw ValidationError("sign map acts on " + std::to_string(sign_bound())
                              + " signs, permutation has sign bound " + std::to_string(perm.sign_bound()));
    const int n = static_cast<int>(perm.size());
    std::vector<int> symbols(perm.symbols().begin(), perm.symbols().end());
    std::vector<int> signs(perm.signs().begin(), perm.signs().end());
    for (int& s : signs)
        s = sign_map_[s - 1];
    if (complement_)
        for (int& a : symbols)
            a = n + 1 - a;
    if (reverse_) {
        std::reverse(symbols.begin(), symbols.end());
        std::reverse(signs.begin(), signs.end());
    }
    return SignedPermutation(std::move(symbols), std::move(signs), perm.sign_bound());
}

SignedPattern SymmetryElement::apply(const SignedPattern& pat) const
{
    return SignedPattern(apply(static_cast<const SignedPermutation&>(pat)));
}

PatternSet SymmetryElement::apply(const PatternSet& patterns) const
{
    std::vector<SignedPattern> image;
    image.reserve(patterns.size());
    for (const auto& p : patterns)
        image.push_back(apply(p));
    return PatternSet(std::move(image), patterns.sign_bound());
}

std::string SymmetryElement::to_string() const
{
    std::ostringstream out;
    out << (reverse_ ? "er" : "") << (reverse_ && complement_ ? "*" : "") << (complement_ ? "ec" : "");
    if (!reverse_ && !complement_)
        out << "id";
    out << " h(";
    for (std::size_t i = 0; i < sign_map_.size(); ++i)
        out << (i ? "," : "") << sign_map_[i];
    out << ')';
    return out.str();
}

// ---------------------------------------------------------------------------
// group action

std::vector<SymmetryElement> group_elements(int sign_bound)
{
    validate_sign_bound(sign_bound);
    if (sign_bound > kMaxGroupSignBound)
        throw CapacityError("symmetry group enumeration limited to sign bound "
                            + std::to_string(kMaxGroupSignBound) + ", got " + std::to_string(sign_bound));
    std::vector<int> map(sign_bound);
    std::iota(map.begin(), map.end(), 1);
    std::vector<SymmetryElement> elements;
    do {
        for (bool rev : {false, true})
            for (bool comp : {false, true})
                elements.emplace_back(rev, comp, map);
    } while (std::next_permutation(map.begin(), map.end()));
    return elements;
}

std::size_t generated_group_order(std::span<const SymmetryElement> generators)
{
    if (generators.empty())
        return 1;
    std::set<SymmetryElement> seen{SymmetryElement::identity(generators.front().sign_bound())};
    std::vector<SymmetryElement> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<SymmetryElement> next;
        for (const auto& g : frontier)
            for (const auto& gen : generators) {
                auto h = gen.compose(g);
                if (seen.insert(h).second)
                    next.push_back(std::move(h));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

std::set<PatternSet> symmetry_orbit(const PatternSet& patterns)
{
    std::set<PatternSet> orbit;
    for (const auto& g : group_elements(patterns.sign_bound()))
        orbit.insert(g.apply(patterns));
    return orbit;
}

PatternSet canonical_form(const PatternSet& patterns)
{
    auto orbit = symmetry_orbit(patterns);
    return *orbit.begin();
}

} // namespace signedpat
