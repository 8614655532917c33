#include "spinweave/projector.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

#include "spinweave/errors.hpp"
#include "spinweave/path.hpp"

namespace spinweave {

JointState JointState::initial(int n) {
    JointState state;
    state.n = n;
    state.entries[{std::string(), 0u}] = 1;
    return state;
}

void JointState::advance(const SetupConfig& cfg) {
    assert(cfg.n == n && emitters_done < n);
    int k = emitters_done;
    std::map<std::pair<std::string, std::uint32_t>, long long> next;
    for (const auto& [key, amp] : entries) {
        const auto& [atoms, mask] = key;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) continue; // detector already registered a photon
            int chi = cfg.chi[j][k];
            if (chi == 0) continue;
            char sign = cfg.sigma_minus[j] ? '+' : '-';
            next[{atoms + sign, mask | (1u << j)}] += chi * amp;
        }
    }
    for (auto it = next.begin(); it != next.end();)
        it = it->second == 0 ? next.erase(it) : std::next(it);
    entries = std::move(next);
    ++emitters_done;
}

SparseState apply_projection_sequence(const SetupConfig& cfg, FoldStats* stats) {
    JointState joint = JointState::initial(cfg.n);
    FoldStats local;
    for (int k = 0; k < cfg.n; ++k) {
        joint.advance(cfg);
        local.entries_visited += joint.entry_count();
        local.max_entries = std::max(local.max_entries, joint.entry_count());
    }
    // each advance adds one distinct detector, so every survivor has all
    // n detectors occupied; no final filtering is needed
    SparseState out(cfg.n);
    for (const auto& [key, amp] : joint.entries) {
        assert(key.second == (cfg.n == 32 ? ~0u : (1u << cfg.n) - 1));
        out.set(key.first, RadicalAmplitude::from_integer(amp));
    }
    if (stats) *stats = local;
    return out;
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

SparseState permutation_sum_oracle(const SetupConfig& cfg, HalfInt m, int cap) {
    int n = cfg.n;
    if (n > cap)
        throw CapExceeded(n, cap,
                          "permutation sum over " + std::to_string(n) +
                              " emitters exceeds the cap of " + std::to_string(cap));
    if (!m_in_range(HalfInt::from_doubled(n), m))
        throw MOutOfRange("m = " + to_string(m) + " is not a projection of " +
                          std::to_string(n) + " qubits");
    int k = (n + m.doubled()) / 2; // number of + signs in every output key

    std::map<std::string, long long> sums;
    std::vector<int> detector_slots(n);
    std::iota(detector_slots.begin(), detector_slots.end(), 0);
    do {
        // slots 0..k-1 carry the sigma-minus factors, the rest sigma-plus;
        // any mismatch zeroes the whole polarizer product
        bool alive = true;
        for (int i = 0; i < n && alive; ++i)
            alive = (i < k) == static_cast<bool>(cfg.sigma_minus[detector_slots[i]]);
        if (!alive) continue;
        std::vector<int> atom_slots(n);
        std::iota(atom_slots.begin(), atom_slots.end(), 0);
        do {
            long long product = 1;
            for (int i = 0; i < n && product != 0; ++i)
                product *= cfg.chi[detector_slots[i]][atom_slots[i]];
            if (product == 0) continue;
            std::string basis(n, '-');
            for (int i = 0; i < k; ++i) basis[atom_slots[i]] = '+';
            sums[basis] += product;
        } while (std::next_permutation(atom_slots.begin(), atom_slots.end()));
    } while (std::next_permutation(detector_slots.begin(), detector_slots.end()));

    // every distinct outcome was counted once per ordering of the + block
    // and of the - block
    long long overcount = factorial(k) * factorial(n - k);
    SparseState out(n);
    for (const auto& [basis, total] : sums) {
        if (total == 0) continue;
        if (total % overcount != 0)
            throw Error("multiplicity division is not exact for " + basis);
        out.set(basis, RadicalAmplitude::from_integer(total / overcount));
    }
    return out;
}

} // namespace spinweave
