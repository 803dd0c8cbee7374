#pragma once

#include "signedpat/core.hpp"

#include <string_view>

namespace signedpat {

/// Parses `1^1 2^2; 2^1 1^3`: patterns are whitespace-separated SYMBOL^SIGN
/// tokens, joined by ';'. An empty or blank literal is the empty set.
/// Errors name the 1-based column of the offending token.
PatternSet parse_pattern_set(std::string_view literal, int r);

} // namespace signedpat
