#include "spinweave/setup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "spinweave/errors.hpp"

namespace spinweave {

AssignmentPolicy AssignmentPolicy::canonical() {
    return {};
}

AssignmentPolicy AssignmentPolicy::seeded(std::uint64_t seed) {
    AssignmentPolicy policy;
    policy.seed_ = seed;
    return policy;
}

std::vector<int> AssignmentPolicy::detector_order(int n) const {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (seed_) {
        // std::shuffle is not pinned by the standard; swap on raw engine
        // output so the order is reproducible everywhere.
        std::mt19937_64 rng(*seed_);
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
    }
    return order;
}

namespace {

void require_m(const CouplingPath& path, HalfInt m) {
    if (!m_in_range(path.final_spin(), m))
        throw MOutOfRange("m = " + to_string(m) + " is not a projection of spin " +
                          to_string(path.final_spin()));
}

// n/2 + m; integral because m and n/2 always have equal parity here.
int sigma_minus_count(int n, HalfInt m) {
    return (n + m.doubled()) / 2;
}

// Wiring shared by both compile paths: emitter 1 and every ascent emitter
// reach all detectors not consumed by an earlier descent; each descent
// emitter gets exactly its two paired detectors, with the phase flip on
// the sigma-minus one.
SetupConfig wire(const CouplingPath& path, std::vector<bool> sigma_minus,
                 std::map<int, std::pair<int, int>> pairs) {
    int n = static_cast<int>(path.size());
    SetupConfig cfg;
    cfg.n = n;
    cfg.sigma_minus = std::move(sigma_minus);
    cfg.chi.assign(n, std::vector<int>(n, 0));
    cfg.descent_pairs = std::move(pairs);
    std::vector<bool> consumed(n, false);
    for (int k = 0; k < n; ++k) {
        if (k == 0 || path.is_ascent(k)) {
            for (int j = 0; j < n; ++j)
                if (!consumed[j]) cfg.chi[j][k] = 1;
        } else {
            auto [jm, jp] = cfg.descent_pairs.at(k);
            cfg.chi[jm][k] = -1;
            cfg.chi[jp][k] = 1;
            consumed[jm] = consumed[jp] = true;
        }
    }
    return cfg;
}

} // namespace

SetupConfig compile_setup(const CouplingPath& path, HalfInt m, const AssignmentPolicy& policy) {
    require_m(path, m);
    int n = static_cast<int>(path.size());
    std::vector<int> order = policy.detector_order(n);
    std::vector<bool> sigma_minus(n, false);
    for (int i = 0; i < sigma_minus_count(n, m); ++i) sigma_minus[order[i]] = true;
    std::map<int, std::pair<int, int>> pairs;
    std::vector<bool> consumed(n, false);
    for (int k = 1; k < n; ++k) {
        if (path.is_ascent(k)) continue;
        int jm = -1;
        int jp = -1;
        for (int j : order) {
            if (consumed[j]) continue;
            if (sigma_minus[j] && jm < 0) jm = j;
            if (!sigma_minus[j] && jp < 0) jp = j;
        }
        // |m| <= S_n bounds the descent count by both polarizer counts, so
        // fresh detectors of both kinds always remain.
        assert(jm >= 0 && jp >= 0);
        pairs[k] = {jm, jp};
        consumed[jm] = consumed[jp] = true;
    }
    return wire(path, std::move(sigma_minus), std::move(pairs));
}

SetupConfig compile_setup(const CouplingPath& path, HalfInt m, const ExplicitLayout& layout) {
    require_m(path, m);
    int n = static_cast<int>(path.size());
    if (layout.sigma_minus.size() != static_cast<std::size_t>(n))
        throw InvalidExplicitLayout("layout lists " + std::to_string(layout.sigma_minus.size()) +
                                    " polarizers for " + std::to_string(n) + " detectors");
    int want = sigma_minus_count(n, m);
    int have = static_cast<int>(std::count(layout.sigma_minus.begin(), layout.sigma_minus.end(), true));
    if (have != want)
        throw InvalidExplicitLayout("need exactly " + std::to_string(want) +
                                    " sigma-minus polarizers, layout has " + std::to_string(have));
    for (const auto& [k, pair] : layout.descent_pairs)
        if (k < 1 || k >= n || path.is_ascent(k))
            throw InvalidExplicitLayout("emitter " + std::to_string(k + 1) +
                                        " is not a descent of this history");
    std::vector<bool> consumed(n, false);
    for (int k = 1; k < n; ++k) {
        if (path.is_ascent(k)) continue;
        auto it = layout.descent_pairs.find(k);
        if (it == layout.descent_pairs.end())
            throw InvalidExplicitLayout("no detector pair for descent emitter " +
                                        std::to_string(k + 1));
        auto [jm, jp] = it->second;
        if (jm < 0 || jm >= n || jp < 0 || jp >= n || jm == jp)
            throw InvalidExplicitLayout("bad detector pair for emitter " + std::to_string(k + 1));
        if (!layout.sigma_minus[jm] || layout.sigma_minus[jp])
            throw InvalidExplicitLayout("pair for emitter " + std::to_string(k + 1) +
                                        " must name a sigma-minus then a sigma-plus detector");
        if (consumed[jm] || consumed[jp])
            throw InvalidExplicitLayout("pair for emitter " + std::to_string(k + 1) +
                                        " reuses a consumed detector");
        consumed[jm] = consumed[jp] = true;
    }
    return wire(path, layout.sigma_minus, layout.descent_pairs);
}

std::pair<int, int> column_sums(const SetupConfig& cfg, int emitter) {
    if (emitter < 1 || emitter > cfg.n)
        throw IndexOutOfRange("emitter " + std::to_string(emitter) + " outside 1.." +
                              std::to_string(cfg.n));
    int minus_sum = 0;
    int plus_sum = 0;
    for (int j = 0; j < cfg.n; ++j)
        (cfg.sigma_minus[j] ? minus_sum : plus_sum) += cfg.chi[j][emitter - 1];
    return {minus_sum, plus_sum};
}

} // namespace spinweave
