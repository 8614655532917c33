#include <doctest.h>

#include <vector>

#include "spinweave/coupled_basis.hpp"
#include "spinweave/errors.hpp"
#include "spinweave/rational.hpp"

using namespace spinweave;

namespace {

const HalfInt half = HalfInt::half();

RadicalAmplitude rt(int num, int den, std::int64_t radicand) {
    return RadicalAmplitude::term(Rational(num, den), radicand);
}

} // namespace

TEST_CASE("coupling coefficients at small spins") {
    // coupling two 1/2 spins: triplet and singlet weights 1/sqrt(2)
    CHECK(cgc(half, HalfInt(0), CgcBranch::up, half) == rt(1, 2, 2));
    CHECK(cgc(half, HalfInt(0), CgcBranch::up, -half) == rt(1, 2, 2));
    CHECK(cgc(half, HalfInt(0), CgcBranch::down, half) == -rt(1, 2, 2));
    CHECK(cgc(half, HalfInt(0), CgcBranch::down, -half) == rt(1, 2, 2));
    // stretched component
    CHECK(cgc(half, HalfInt(1), CgcBranch::up, half) == RadicalAmplitude::from_integer(1));
    CHECK(cgc(half, HalfInt(-1), CgcBranch::up, -half) == RadicalAmplitude::from_integer(1));
    // spin 1 with a 1/2, lower branch
    CHECK(cgc(HalfInt(1), half, CgcBranch::down, half) == -rt(1, 3, 3));
    CHECK(cgc(HalfInt(1), half, CgcBranch::down, -half) == rt(1, 3, 6));
    CHECK(cgc(HalfInt(1), half, CgcBranch::up, half) == rt(1, 3, 6));
    CHECK(cgc(HalfInt(1), half, CgcBranch::up, -half) == rt(1, 3, 3));
}

TEST_CASE("selection rules give exact zeros") {
    CHECK(cgc(half, HalfInt(2), CgcBranch::up, half).is_zero());
    CHECK(cgc(half, half, CgcBranch::up, half).is_zero()); // parity mismatch
    CHECK(cgc(HalfInt(1), HalfInt::from_doubled(3), CgcBranch::up, -half).is_zero());
    CHECK(cgc(HalfInt(1), -HalfInt::from_doubled(3), CgcBranch::up, half).is_zero());
}

TEST_CASE("branch and argument guards") {
    CHECK_THROWS_AS(cgc(HalfInt(0), half, CgcBranch::down, half), InvalidBranch);
    CHECK_THROWS_AS(cgc(HalfInt(1), HalfInt(0), CgcBranch::up, HalfInt(1)), InvalidBranch);
    CHECK_THROWS_AS(cgc(HalfInt(1), HalfInt(0), CgcBranch::up, HalfInt(0)), InvalidBranch);
    CHECK_THROWS_AS(cgc(HalfInt(-1), HalfInt(0), CgcBranch::up, half), InvalidBranch);
}

TEST_CASE("squared coefficients in a column sum to one") {
    for (int dj = 1; dj <= 8; ++dj) {
        HalfInt j1 = HalfInt::from_doubled(dj);
        for (CgcBranch branch : {CgcBranch::up, CgcBranch::down}) {
            HalfInt total = branch == CgcBranch::up ? j1 + half : j1 - half;
            for (HalfInt m : m_values(total)) {
                auto c_up = cgc(j1, m, branch, half);
                auto c_down = cgc(j1, m, branch, -half);
                CHECK(c_up * c_up + c_down * c_down == RadicalAmplitude::from_integer(1));
            }
        }
    }
}

TEST_CASE("coupled eigenstates in the product basis") {
    auto triplet0 = build_coupled_state(parse_path("1/2,1"), HalfInt(0));
    CHECK(triplet0.support_size() == 2);
    CHECK(triplet0.at("+-") == rt(1, 2, 2));
    CHECK(triplet0.at("-+") == rt(1, 2, 2));

    auto singlet = build_coupled_state(parse_path("1/2,0"), HalfInt(0));
    CHECK(singlet.at("+-") == rt(1, 2, 2));
    CHECK(singlet.at("-+") == -rt(1, 2, 2));

    // three qubits, total spin 1/2 through the intermediate triplet
    auto w3 = build_coupled_state(parse_path("1/2,1,1/2"), half);
    CHECK(w3.support_size() == 3);
    CHECK(w3.at("++-") == rt(1, 3, 6));
    CHECK(w3.at("+-+") == rt(-1, 6, 6));
    CHECK(w3.at("-++") == rt(-1, 6, 6));

    auto stretched = build_coupled_state(parse_path("1/2,1,3/2,2,5/2"), HalfInt::from_doubled(5));
    CHECK(stretched.support_size() == 1);
    CHECK(stretched.at("+++++") == RadicalAmplitude::from_integer(1));

    CHECK_THROWS_AS(build_coupled_state(parse_path("1/2,1"), half), MOutOfRange);
    CHECK_THROWS_AS(build_coupled_state(parse_path("1/2,1"), HalfInt(2)), MOutOfRange);
}

TEST_CASE("eigenstates are normalized with one radicand per amplitude") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& path : enumerate_paths(n))
            for (HalfInt m : m_values(path.final_spin())) {
                auto psi = build_coupled_state(path, m);
                CHECK(inner_product(psi, psi) == RadicalAmplitude::from_integer(1));
                for (const auto& [basis, amp] : psi.amplitudes()) {
                    CHECK(amp.term_count() == 1);
                    CHECK(magnetization(basis) == m);
                }
            }
}

TEST_CASE("diagonal and squared spin operators") {
    SparseState probe(3);
    probe.set("++-", RadicalAmplitude::from_integer(1));
    CHECK(apply_sz(probe).at("++-") == RadicalAmplitude::from_rational(Rational(1, 2)));

    auto singlet = build_coupled_state(parse_path("1/2,0"), HalfInt(0));
    CHECK(apply_s2(singlet).is_zero());

    auto w3 = build_coupled_state(parse_path("1/2,1,1/2"), half);
    CHECK(apply_s2(w3) == w3.scaled(RadicalAmplitude::from_rational(Rational(3, 4))));
}

TEST_CASE("ladder operators annihilate the extremes") {
    auto top = build_coupled_state(parse_path("1/2,1,3/2"), HalfInt::from_doubled(3));
    CHECK(apply_raise(top).is_zero());
    CHECK(apply_lower(top.flipped()).is_zero());
    CHECK_FALSE(apply_lower(top).is_zero());
}

TEST_CASE("every eigenstate satisfies both eigenvalue relations") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& path : enumerate_paths(n))
            for (HalfInt m : m_values(path.final_spin())) {
                auto psi = build_coupled_state(path, m);
                auto m_scale = RadicalAmplitude::from_rational(to_rational(m));
                auto s_scale =
                    RadicalAmplitude::from_rational(spin_squared_eigenvalue(path.final_spin()));
                CHECK(apply_sz(psi) == psi.scaled(m_scale));
                CHECK(apply_s2(psi) == psi.scaled(s_scale));
            }
}

TEST_CASE("eigenstates of a fixed size are pairwise orthogonal") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<SparseState> states;
        for (const auto& path : enumerate_paths(n))
            for (HalfInt m : m_values(path.final_spin()))
                states.push_back(build_coupled_state(path, m));
        CHECK(states.size() == (1u << n));
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = i + 1; j < states.size(); ++j)
                CHECK(inner_product(states[i], states[j]).is_zero());
    }
}
