#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "spinweave/half_int.hpp"
#include "spinweave/setup.hpp"
#include "spinweave/sparse_state.hpp"

namespace spinweave {

inline constexpr int kDefaultOracleCap = 7;

// Intermediate state of the emitter-by-emitter fold: after j emitters
// have fired, each entry maps (atomic signs so far, bitmask of detectors
// that have clicked) to an integer amplitude. Detector bit k set means
// detector k absorbed one photon.
struct JointState {
    int n = 0;
    int emitters_done = 0;
    std::map<std::pair<std::string, std::uint32_t>, long long> entries;

    static JointState initial(int n);
    // Fires emitter number emitters_done (0-based) through every fiber.
    void advance(const SetupConfig& cfg);
    std::size_t entry_count() const { return entries.size(); }
};

struct FoldStats {
    std::size_t max_entries = 0;
    std::size_t entries_visited = 0;
};

// Evolves all n emitters and keeps the component where every detector
// clicked exactly once. Returns the unnormalized integer-amplitude state
// of the atoms. Exact and polynomial-memory in practice (the live map
// has at most 3^n entries).
SparseState apply_projection_sequence(const SetupConfig& cfg,
                                      FoldStats* stats = nullptr);

// Direct evaluation of the same amplitudes as a sum over permutation
// pairs (detector assignment x atomic sign placement), divided by
// k!(n-k)! with k = n/2 + m. Factorial cost; refuses n above cap by
// throwing CapExceeded. Used as an independent check of the fold.
SparseState permutation_sum_oracle(const SetupConfig& cfg, HalfInt m,
                                   int cap = kDefaultOracleCap);

} // namespace spinweave
