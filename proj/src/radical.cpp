#include "spinweave/radical.hpp"

#include <cassert>
#include <cmath>
#include <numeric>

#include "spinweave/errors.hpp"

namespace spinweave {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 wide = static_cast<__int128>(a) * b;
    if (wide > INT64_MAX)
        throw Error("radicand overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return static_cast<std::int64_t>(wide);
}

} // namespace

std::pair<std::int64_t, std::int64_t> extract_square(std::int64_t r) {
    assert(r > 0);
    std::int64_t outside = 1;
    std::int64_t inside = 1;
    for (std::int64_t p = 2; p * p <= r; ++p) {
        if (r % p != 0) continue;
        int e = 0;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        for (; e >= 2; e -= 2) outside *= p;
        if (e == 1) inside *= p;
    }
    return {outside, inside * r}; // leftover r is 1 or prime
}

RadicalAmplitude RadicalAmplitude::from_rational(Rational q) {
    RadicalAmplitude a;
    a.add_term(1, q);
    return a;
}

RadicalAmplitude RadicalAmplitude::term(Rational coeff, std::int64_t radicand) {
    if (radicand <= 0) throw Error("radicand must be positive");
    auto [outside, inside] = extract_square(radicand);
    RadicalAmplitude a;
    a.add_term(inside, coeff * outside);
    return a;
}

RadicalAmplitude RadicalAmplitude::sqrt_of(const Rational& q) {
    if (q < 0) throw Error("cannot take the square root of " + to_fraction_string(q));
    if (q == 0) return {};
    // sqrt(p/q) = (1/q) * sqrt(p*q)
    BigInt pq = numerator(q) * denominator(q);
    if (pq > INT64_MAX) throw Error("radicand overflow in sqrt of " + to_fraction_string(q));
    return term(Rational(1, denominator(q)), pq.convert_to<std::int64_t>());
}

std::optional<Rational> RadicalAmplitude::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
    return std::nullopt;
}

int RadicalAmplitude::single_term_sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() != 1) throw Error("sign of a multi-term value is not defined here");
    return terms_.begin()->second > 0 ? 1 : -1;
}

RadicalAmplitude RadicalAmplitude::reciprocal_single_term() const {
    if (terms_.size() != 1) throw Error("reciprocal requires exactly one term");
    auto [r, q] = *terms_.begin();
    // 1 / (q * sqrt(r)) = (1 / (q * r)) * sqrt(r)
    RadicalAmplitude a;
    a.add_term(r, Rational(1) / (q * r));
    return a;
}

RadicalAmplitude RadicalAmplitude::operator-() const {
    RadicalAmplitude a;
    for (const auto& [r, q] : terms_) a.terms_.emplace(r, -q);
    return a;
}

RadicalAmplitude operator+(const RadicalAmplitude& a, const RadicalAmplitude& b) {
    RadicalAmplitude out = a;
    out += b;
    return out;
}

RadicalAmplitude operator-(const RadicalAmplitude& a, const RadicalAmplitude& b) {
    return a + (-b);
}

RadicalAmplitude operator*(const RadicalAmplitude& a, const RadicalAmplitude& b) {
    RadicalAmplitude out;
    for (const auto& [r1, q1] : a.terms_) {
        for (const auto& [r2, q2] : b.terms_) {
            // both radicands squarefree: sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)(r2/g))
            std::int64_t g = std::gcd(r1, r2);
            out.add_term(checked_mul(r1 / g, r2 / g), q1 * q2 * g);
        }
    }
    return out;
}

RadicalAmplitude& RadicalAmplitude::operator+=(const RadicalAmplitude& other) {
    for (const auto& [r, q] : other.terms_) add_term(r, q);
    return *this;
}

RadicalAmplitude& RadicalAmplitude::operator*=(const RadicalAmplitude& other) {
    *this = *this * other;
    return *this;
}

double RadicalAmplitude::approx() const {
    double total = 0;
    for (const auto& [r, q] : terms_)
        total += q.convert_to<double>() * std::sqrt(static_cast<double>(r));
    return total;
}

std::string RadicalAmplitude::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [r, q] : terms_) {
        Rational mag = q > 0 ? q : Rational(-q);
        if (out.empty()) {
            if (q < 0) out += "-";
        } else {
            out += q < 0 ? " - " : " + ";
        }
        if (r == 1) {
            out += to_fraction_string(mag);
        } else {
            if (mag != 1) out += to_fraction_string(mag) + "*";
            out += "sqrt(" + std::to_string(r) + ")";
        }
    }
    return out;
}

void RadicalAmplitude::add_term(std::int64_t radicand, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        terms_.emplace(radicand, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

} // namespace spinweave
