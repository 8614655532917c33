#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "spinweave/rational.hpp"

namespace spinweave {

// Splits r = outside^2 * inside with inside squarefree. r must be positive.
std::pair<std::int64_t, std::int64_t> extract_square(std::int64_t r);

// Exact number of the form sum_i q_i * sqrt(r_i) with rational q_i and
// squarefree positive integer radicands r_i. Closed under + and *. The zero
// value is the empty sum; stored coefficients are never zero.
class RadicalAmplitude {
  public:
    RadicalAmplitude() = default;

    static RadicalAmplitude from_rational(Rational q);
    static RadicalAmplitude from_integer(std::int64_t v) { return from_rational(Rational(v)); }
    // coeff * sqrt(radicand); radicand > 0 is reduced to squarefree form.
    static RadicalAmplitude term(Rational coeff, std::int64_t radicand);
    // sqrt(p/q) for p/q >= 0, normalized to (1/q) * sqrt(p*q).
    static RadicalAmplitude sqrt_of(const Rational& q);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::int64_t, Rational>& terms() const { return terms_; }

    // Rational value if the only radicand is 1.
    std::optional<Rational> as_rational() const;

    // Sign of a single-term (or zero) value: -1, 0, +1.
    int single_term_sign() const;
    // 1/x for a single-term value x = q*sqrt(r): (1/(q*r)) * sqrt(r).
    RadicalAmplitude reciprocal_single_term() const;

    RadicalAmplitude operator-() const;
    friend RadicalAmplitude operator+(const RadicalAmplitude& a, const RadicalAmplitude& b);
    friend RadicalAmplitude operator-(const RadicalAmplitude& a, const RadicalAmplitude& b);
    friend RadicalAmplitude operator*(const RadicalAmplitude& a, const RadicalAmplitude& b);
    RadicalAmplitude& operator+=(const RadicalAmplitude& other);
    RadicalAmplitude& operator*=(const RadicalAmplitude& other);

    bool operator==(const RadicalAmplitude& other) const = default;

    double approx() const;
    std::string to_string() const; // human-readable, e.g. "1/2*sqrt(2)"

  private:
    void add_term(std::int64_t radicand, const Rational& coeff);

    std::map<std::int64_t, Rational> terms_;
};

} // namespace spinweave
