#pragma once

// Maps a pattern set, up to symmetry, to the counting family it belongs to
// and dispatches a count to one of the four computation paths.

#include "signedpat/formulas.hpp"
#include "signedpat/series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace signedpat {

enum class Method { Brute, Formula, Recurrence, Series };

std::string_view to_string(Method m);
/// Throws ValidationError on unknown names.
Method parse_method(std::string_view name);

enum class Family {
    Empty,
    Length1,        // {1^a}
    SingleTwoLetter,// one 2-letter pattern
    Chain,          // {(1^b,2^a_1),...,(1^b,2^a_l)}
    Case1,          // the five pairs counted by n!(n+r-1)(r-1)^(n-1)
    Case2,          // the four pairs counted by multi_line_count(n, r, 2)
    Case3,
    Case4,
    Lines,          // l single 2-letter homogeneous patterns on distinct signs
    GoodSet,
    FullClosure,    // every sign decoration of one classical pattern
    Unregistered,
};

std::string_view to_string(Family f);

struct FamilyMatch {
    Family family = Family::Unregistered;
    /// Chain or Lines length l; sign a for Length1.
    int parameter = 0;
    std::optional<GoodSetSpec> good_set;
    PlainPattern closure_pattern;
    std::vector<Method> methods{Method::Brute};

    bool supports(Method m) const;
};

/// Identify the family of T viewed in E^r (T.sign_bound() <= r). Pair
/// families are matched through canonical_form, so any symmetric variant of
/// a listed set is recognised; that step needs r <= kMaxGroupSignBound.
FamilyMatch identify_family(const PatternSet& patterns, int r);

/// |E_n^r(T)| for n = 0..nmax by the given method. Throws ValidationError
/// if the method is not available for T's family.
std::vector<BigInt> count_sequence(int nmax, int r, const PatternSet& patterns, Method method,
                                   const SearchLimits& limits = {});

BigInt count(int n, int r, const PatternSet& patterns, Method method, const SearchLimits& limits = {});

} // namespace signedpat
