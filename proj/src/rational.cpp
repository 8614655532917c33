#include "spinweave/rational.hpp"

#include <cctype>

#include "spinweave/errors.hpp"

namespace spinweave {

namespace {

BigInt parse_big(std::string_view digits, std::string_view whole) {
    std::size_t start = !digits.empty() && digits[0] == '-' ? 1 : 0;
    if (digits.size() == start)
        throw ParseError(std::string(whole), "not a rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw ParseError(std::string(whole),
                             "not a rational: '" + std::string(whole) + "'");
    return BigInt(std::string(digits));
}

} // namespace

std::string to_fraction_string(const Rational& q) {
    std::string text = numerator(q).str();
    if (denominator(q) != 1) text += "/" + denominator(q).str();
    return text;
}

Rational parse_fraction(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_big(text, text));
    BigInt num = parse_big(text.substr(0, slash), text);
    BigInt den = parse_big(text.substr(slash + 1), text);
    if (den == 0)
        throw ParseError(std::string(text), "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

} // namespace spinweave
