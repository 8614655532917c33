#include "spinweave/half_int.hpp"

#include <charconv>

#include "spinweave/errors.hpp"

namespace spinweave {

namespace {

int parse_int_token(std::string_view digits, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError(std::string(whole),
                         "not a half-integer: '" + std::string(whole) + "'");
    return value;
}

} // namespace

HalfInt parse_half_int(std::string_view text) {
    if (text.empty()) throw ParseError("", "empty half-integer token");
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return HalfInt(parse_int_token(text, text));
    if (text.substr(slash + 1) != "2")
        throw ParseError(std::string(text),
                         "denominator must be 2 in '" + std::string(text) + "'");
    int p = parse_int_token(text.substr(0, slash), text);
    if (p % 2 == 0)
        throw ParseError(std::string(text), "'" + std::string(text) +
                                                "' is reducible; write the integer instead");
    return HalfInt::from_doubled(p);
}

} // namespace spinweave
