#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "spinweave/errors.hpp"
#include "spinweave/radical.hpp"

using namespace spinweave;

namespace {

// Small random element of the ring, up to three terms over a fixed
// radicand pool. Deterministic given the generator state.
RadicalAmplitude random_value(std::mt19937_64& rng) {
    static const std::int64_t pool[] = {1, 2, 3, 5, 6, 7, 10, 15};
    RadicalAmplitude v;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < terms; ++i) {
        int num = static_cast<int>(rng() % 9) - 4;
        int den = 1 + static_cast<int>(rng() % 4);
        v += RadicalAmplitude::term(Rational(num, den), pool[rng() % 8]);
    }
    return v;
}

} // namespace

TEST_CASE("square extraction") {
    using P = std::pair<std::int64_t, std::int64_t>;
    CHECK(extract_square(1) == P{1, 1});
    CHECK(extract_square(2) == P{1, 2});
    CHECK(extract_square(4) == P{2, 1});
    CHECK(extract_square(12) == P{2, 3});
    CHECK(extract_square(49) == P{7, 1});
    CHECK(extract_square(360) == P{6, 10});
    CHECK(extract_square(97) == P{1, 97});
    CHECK(extract_square(2 * 3 * 3 * 5 * 5 * 5) == P{15, 10});
}

TEST_CASE("radicands are canonicalized to squarefree form") {
    CHECK(RadicalAmplitude::term(Rational(1), 8) == RadicalAmplitude::term(Rational(2), 2));
    CHECK(RadicalAmplitude::term(Rational(1), 9) == RadicalAmplitude::from_integer(3));
    CHECK(RadicalAmplitude::term(Rational(0), 5).is_zero());
    CHECK(RadicalAmplitude::sqrt_of(Rational(1, 2)) == RadicalAmplitude::term(Rational(1, 2), 2));
    CHECK(RadicalAmplitude::sqrt_of(Rational(4)) == RadicalAmplitude::from_integer(2));
    CHECK(RadicalAmplitude::sqrt_of(Rational(2, 3)) == RadicalAmplitude::term(Rational(1, 3), 6));
    CHECK(RadicalAmplitude::sqrt_of(Rational(0)).is_zero());
    CHECK_THROWS_AS(RadicalAmplitude::term(Rational(1), 0), Error);
    CHECK_THROWS_AS(RadicalAmplitude::term(Rational(1), -2), Error);
    CHECK_THROWS_AS(RadicalAmplitude::sqrt_of(Rational(-1)), Error);
}

TEST_CASE("exact identities") {
    auto one = RadicalAmplitude::from_integer(1);
    auto sqrt2 = RadicalAmplitude::sqrt_of(Rational(2));
    auto sqrt3 = RadicalAmplitude::sqrt_of(Rational(3));
    CHECK(sqrt2 * sqrt2 == RadicalAmplitude::from_integer(2));
    CHECK((one + sqrt2) * (one - sqrt2) == RadicalAmplitude::from_integer(-1));
    CHECK(sqrt2 * sqrt3 == RadicalAmplitude::sqrt_of(Rational(6)));
    // shared prime factor: sqrt(6) * sqrt(10) = 2 * sqrt(15)
    CHECK(RadicalAmplitude::sqrt_of(Rational(6)) * RadicalAmplitude::sqrt_of(Rational(10)) ==
          RadicalAmplitude::term(Rational(2), 15));
    CHECK((sqrt2 - sqrt2).is_zero());
    CHECK((sqrt2 + sqrt3).term_count() == 2);
    CHECK((-sqrt2).terms().at(2) == Rational(-1));
}

TEST_CASE("ring laws hold on random values") {
    std::mt19937_64 rng(2026);
    auto one = RadicalAmplitude::from_integer(1);
    for (int i = 0; i < 200; ++i) {
        auto a = random_value(rng);
        auto b = random_value(rng);
        auto c = random_value(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * one == a);
        CHECK((a * RadicalAmplitude{}).is_zero());
        CHECK(a - b == a + (-b));
    }
}

TEST_CASE("approx tracks the exact value") {
    CHECK(RadicalAmplitude::sqrt_of(Rational(2)).approx() == doctest::Approx(std::sqrt(2.0)));
    CHECK(RadicalAmplitude{}.approx() == 0.0);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto a = random_value(rng);
        auto b = random_value(rng);
        CHECK(std::abs((a * b).approx() - a.approx() * b.approx()) < 1e-9);
        CHECK(std::abs((a + b).approx() - (a.approx() + b.approx())) < 1e-9);
    }
}

TEST_CASE("single-term helpers") {
    auto x = RadicalAmplitude::term(Rational(-3, 4), 10);
    CHECK(x.single_term_sign() == -1);
    CHECK(RadicalAmplitude::term(Rational(2), 3).single_term_sign() == 1);
    CHECK(RadicalAmplitude{}.single_term_sign() == 0);
    CHECK(x * x.reciprocal_single_term() == RadicalAmplitude::from_integer(1));

    auto multi = RadicalAmplitude::from_integer(1) + RadicalAmplitude::sqrt_of(Rational(2));
    CHECK_THROWS_AS(multi.single_term_sign(), Error);
    CHECK_THROWS_AS(multi.reciprocal_single_term(), Error);
    CHECK_THROWS_AS(RadicalAmplitude{}.reciprocal_single_term(), Error);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        int num = static_cast<int>(rng() % 9) - 4;
        if (num == 0) num = 5;
        auto v = RadicalAmplitude::term(Rational(num, 1 + static_cast<int>(rng() % 4)),
                                        1 + static_cast<int>(rng() % 20));
        CHECK(v * v.reciprocal_single_term() == RadicalAmplitude::from_integer(1));
    }
}

TEST_CASE("rational extraction") {
    CHECK(RadicalAmplitude{}.as_rational() == Rational(0));
    CHECK(RadicalAmplitude::from_rational(Rational(5, 3)).as_rational() == Rational(5, 3));
    CHECK_FALSE(RadicalAmplitude::sqrt_of(Rational(2)).as_rational().has_value());
    auto mixed = RadicalAmplitude::from_integer(1) + RadicalAmplitude::sqrt_of(Rational(3));
    CHECK_FALSE(mixed.as_rational().has_value());
}

TEST_CASE("text rendering") {
    CHECK(RadicalAmplitude{}.to_string() == "0");
    CHECK(RadicalAmplitude::from_integer(2).to_string() == "2");
    CHECK(RadicalAmplitude::from_rational(Rational(-1, 2)).to_string() == "-1/2");
    CHECK(RadicalAmplitude::sqrt_of(Rational(2)).to_string() == "sqrt(2)");
    CHECK(RadicalAmplitude::term(Rational(1, 2), 2).to_string() == "1/2*sqrt(2)");
    CHECK((-RadicalAmplitude::sqrt_of(Rational(6))).to_string() == "-sqrt(6)");
    CHECK((RadicalAmplitude::from_integer(2) + RadicalAmplitude::sqrt_of(Rational(3))).to_string() ==
          "2 + sqrt(3)");
    CHECK((RadicalAmplitude::from_integer(1) - RadicalAmplitude::term(Rational(1, 3), 5)).to_string() ==
          "1 - 1/3*sqrt(5)");
}
