#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "spinweave/half_int.hpp"

namespace spinweave {

// Exact arbitrary-precision rational; canonical form (lowest terms,
// positive denominator) is maintained by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational to_rational(HalfInt h) {
    return Rational(h.doubled(), 2);
}

// Eigenvalue S(S+1) of the squared total spin, as a pure rational.
inline Rational spin_squared_eigenvalue(HalfInt s) {
    return Rational(BigInt(s.doubled()) * (s.doubled() + 2), 4);
}

// "num/den" in lowest terms, with "/1" dropped: "2", "-1/2".
std::string to_fraction_string(const Rational& q);

// Accepts "3", "-3", "3/4", "-3/4". Throws ParseError otherwise.
Rational parse_fraction(std::string_view text);

} // namespace spinweave
