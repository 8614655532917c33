#include "spinweave/coupled_basis.hpp"

#include <map>
#include <utility>

#include "spinweave/errors.hpp"
#include "spinweave/rational.hpp"

namespace spinweave {

RadicalAmplitude cgc(HalfInt j1, HalfInt m, CgcBranch branch, HalfInt m2) {
    if (abs(m2) != HalfInt::half())
        throw InvalidBranch("m2 must be +1/2 or -1/2, got " + to_string(m2));
    if (j1.is_negative()) throw InvalidBranch("j1 must be nonnegative");
    if (branch == CgcBranch::down && j1 == HalfInt(0))
        throw InvalidBranch("there is no lower branch at j1 = 0");
    HalfInt m1 = m - m2;
    if (abs(m1) > j1 || !(j1 - m1).is_integer()) return {};
    int d = j1.doubled();
    int dm = m.doubled();
    Rational plus(d + dm + 1, 2 * (d + 1));  // (j1 + m + 1/2) / (2 j1 + 1)
    Rational minus(d - dm + 1, 2 * (d + 1)); // (j1 - m + 1/2) / (2 j1 + 1)
    bool m2_up = m2 == HalfInt::half();
    if (branch == CgcBranch::up) return RadicalAmplitude::sqrt_of(m2_up ? plus : minus);
    return m2_up ? -RadicalAmplitude::sqrt_of(minus) : RadicalAmplitude::sqrt_of(plus);
}

SparseState build_coupled_state(const CouplingPath& path, HalfInt m) {
    if (!m_in_range(path.final_spin(), m))
        throw MOutOfRange("m = " + to_string(m) + " is not a projection of spin " +
                          to_string(path.final_spin()));
    // Children at one level are shared between the two m2 branches above
    // them, so memoize per (prefix length, m).
    std::map<std::pair<std::size_t, int>, SparseState> cache;
    auto build = [&](auto&& self, std::size_t len, HalfInt mm) -> const SparseState& {
        auto key = std::make_pair(len, mm.doubled());
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        SparseState state(static_cast<int>(len));
        if (len == 1) {
            state.set(mm == HalfInt::half() ? "+" : "-", RadicalAmplitude::from_integer(1));
        } else {
            HalfInt before = path.spins()[len - 2];
            CgcBranch branch = path.is_ascent(len - 1) ? CgcBranch::up : CgcBranch::down;
            for (HalfInt m2 : {HalfInt::half(), -HalfInt::half()}) {
                HalfInt child_m = mm - m2;
                if (!m_in_range(before, child_m)) continue;
                RadicalAmplitude coeff = cgc(before, mm, branch, m2);
                if (coeff.is_zero()) continue;
                char sign = m2 == HalfInt::half() ? '+' : '-';
                for (const auto& [basis, amp] : self(self, len - 1, child_m).amplitudes())
                    state.add(basis + sign, coeff * amp);
            }
        }
        return cache.emplace(key, std::move(state)).first->second;
    };
    return build(build, path.size(), m);
}

SparseState apply_sz(const SparseState& state) {
    SparseState out(state.qubit_count());
    for (const auto& [basis, amp] : state.amplitudes())
        out.add(basis, amp * RadicalAmplitude::from_rational(to_rational(magnetization(basis))));
    return out;
}

SparseState apply_raise(const SparseState& state) {
    SparseState out(state.qubit_count());
    for (const auto& [basis, amp] : state.amplitudes()) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i] != '-') continue;
            BasisString raised = basis;
            raised[i] = '+';
            out.add(raised, amp);
        }
    }
    return out;
}

SparseState apply_lower(const SparseState& state) {
    SparseState out(state.qubit_count());
    for (const auto& [basis, amp] : state.amplitudes()) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i] != '+') continue;
            BasisString lowered = basis;
            lowered[i] = '-';
            out.add(lowered, amp);
        }
    }
    return out;
}

SparseState apply_s2(const SparseState& state) {
    SparseState out = apply_sz(apply_sz(state));
    SparseState ladder = apply_raise(apply_lower(state));
    ladder.add_state(apply_lower(apply_raise(state)));
    out.add_state(ladder.scaled(RadicalAmplitude::from_rational(Rational(1, 2))));
    return out;
}

} // namespace spinweave
