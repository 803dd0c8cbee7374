#include "signedpat/pattern_io.hpp"

#include <cctype>
#include <charconv>

namespace signedpat {

namespace {

bool is_blank(std::string_view s)
{
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

int parse_int(std::string_view digits, std::size_t column, std::string_view token)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw ValidationError("column " + std::to_string(column) + ": malformed token '" + std::string(token)
                              + "' (expected SYMBOL^SIGN)");
    return value;
}

} // namespace

PatternSet parse_pattern_set(std::string_view literal, int r)
{
    if (r < 1)
        throw ValidationError("sign bound must be positive");
    std::vector<SignedPattern> patterns;
    if (is_blank(literal))
        return PatternSet(r);

    std::size_t start = 0;
    while (start <= literal.size()) {
        const std::size_t stop = std::min(literal.find(';', start), literal.size());
        const std::string_view chunk = literal.substr(start, stop - start);
        const std::size_t chunk_column = start + 1;
        if (is_blank(chunk))
            throw ValidationError("column " + std::to_string(chunk_column) + ": empty pattern");

        std::vector<int> symbols;
        std::vector<int> signs;
        std::size_t i = 0;
        while (i < chunk.size()) {
            if (std::isspace(static_cast<unsigned char>(chunk[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < chunk.size() && !std::isspace(static_cast<unsigned char>(chunk[j])))
                ++j;
            const std::string_view token = chunk.substr(i, j - i);
            const std::size_t column = start + i + 1;
            const std::size_t caret = token.find('^');
            if (caret == std::string_view::npos)
                throw ValidationError("column " + std::to_string(column) + ": malformed token '"
                                      + std::string(token) + "' (expected SYMBOL^SIGN)");
            symbols.push_back(parse_int(token.substr(0, caret), column, token));
            const int sign = parse_int(token.substr(caret + 1), column, token);
            if (sign < 1 || sign > r)
                throw ValidationError("column " + std::to_string(column) + ": sign " + std::to_string(sign)
                                      + " out of range 1.." + std::to_string(r));
            signs.push_back(sign);
            i = j;
        }
        try {
            patterns.emplace_back(std::move(symbols), std::move(signs), r);
        } catch (const ValidationError& e) {
            throw ValidationError("column " + std::to_string(chunk_column) + ": pattern '"
                                  + std::string(chunk) + "': " + e.what());
        }
        start = stop + 1;
    }
    return PatternSet(std::move(patterns), r);
}

} // namespace signedpat
