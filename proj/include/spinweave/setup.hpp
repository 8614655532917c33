#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinweave/half_int.hpp"
#include "spinweave/path.hpp"

namespace spinweave {

// Full description of one emitter/detector run: which polarizer sits on
// each detector and which phase each emitter-detector fiber carries.
// Everything is 0-based in memory; the JSON form is 1-based.
struct SetupConfig {
    int n = 0;
    // polarizers[j]: true if detector j carries a sigma-minus polarizer,
    // i.e. transmits into beta (the |+> component). '-' in text form.
    std::vector<bool> sigma_minus;
    // chi[j][k]: phase on the fiber from emitter k to detector j,
    // one of -1, 0, +1.
    std::vector<std::vector<int>> chi;
    // For each descent emitter (0-based), the pair of detectors that step
    // consumed: first the sigma-minus one (chi = -1), then the sigma-plus
    // one (chi = +1).
    std::map<int, std::pair<int, int>> descent_pairs;

    bool operator==(const SetupConfig&) const = default;
};

// Detector labels a compiler run may pick from, plus the order to pick
// them in. Canonical order is ascending; seeded order is a shuffle.
class AssignmentPolicy {
  public:
    static AssignmentPolicy canonical();
    static AssignmentPolicy seeded(std::uint64_t seed);

    // Detector preference order for a problem of size n (a permutation of
    // 0..n-1). Canonical returns identity; seeded returns a Fisher-Yates
    // shuffle driven by a fixed PRNG so results are stable across
    // platforms and standard libraries.
    std::vector<int> detector_order(int n) const;

    bool is_canonical() const { return !seed_.has_value(); }
    std::optional<std::uint64_t> seed() const { return seed_; }

  private:
    AssignmentPolicy() = default;
    std::optional<std::uint64_t> seed_;
};

// A fully explicit layout: the polarizer pattern plus, for each descent
// step, the two detectors it consumes. Used by the file: policy.
struct ExplicitLayout {
    std::vector<bool> sigma_minus;
    std::map<int, std::pair<int, int>> descent_pairs; // keyed by emitter
};

// Builds the measurement setup that generates |path; m> up to overall
// scale: n/2 + m sigma-minus polarizers, all-ones fibers from emitter 1,
// ascent emitters wired to every not-yet-consumed detector, descent
// emitters wired to one fresh sigma-minus detector with phase -1 and one
// fresh sigma-plus detector with phase +1 (both consumed), zero phase
// elsewhere. The policy only chooses which admissible detectors are used.
// Throws MOutOfRange for inadmissible m.
SetupConfig compile_setup(const CouplingPath& path, HalfInt m,
                          const AssignmentPolicy& policy);

// Same construction with every choice pinned by the caller. Throws
// InvalidExplicitLayout when the layout is inconsistent with the path
// (wrong polarizer count or length, descent pair missing, detector
// reused, polarizer type mismatched).
SetupConfig compile_setup(const CouplingPath& path, HalfInt m,
                          const ExplicitLayout& layout);

// Signed column sums over detectors for one emitter (1-based, 1..n):
// first = sum of chi over sigma-minus detectors, second = over
// sigma-plus detectors. Throws IndexOutOfRange.
std::pair<int, int> column_sums(const SetupConfig& cfg, int emitter);

} // namespace spinweave
