#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinweave/half_int.hpp"
#include "spinweave/path.hpp"
#include "spinweave/projector.hpp"
#include "spinweave/radical.hpp"
#include "spinweave/setup.hpp"
#include "spinweave/sparse_state.hpp"

namespace spinweave {

// Outcome of comparing the simulated setup output against the coupled
// reference state. `ratio` is the constant A with alg = A * ref on the
// full support; `ratio_inverse` scales the other way and matches the
// normalization constant in front of the reference expansion.
struct EquivalenceReport {
    CouplingPath path;
    HalfInt m;
    bool holds = false;
    RadicalAmplitude ratio;
    RadicalAmplitude ratio_inverse;
    RadicalAmplitude alg_norm2; // <alg|alg>, also equals ratio^2 when holds
    std::vector<std::string> mismatch_keys;
};

EquivalenceReport check_proportionality(const CouplingPath& path, HalfInt m,
                                        const SetupConfig& cfg);

// Convenience: compile under the policy, then compare.
EquivalenceReport check_proportionality(const CouplingPath& path, HalfInt m,
                                        const AssignmentPolicy& policy);

// Confirms the simulated state satisfies the step recursion
//   alg(path, m) = c_plus * alg(prefix, m-1/2) x |+>
//                + c_minus * alg(prefix, m+1/2) x |->
// with (c_plus, c_minus) = (S'+m+1/2, S'-m+1/2) when the last step is an
// ascent and (-1, +1) when it is a descent, S' being the spin before the
// step. A child whose m falls outside its range enters as the zero state.
bool check_algorithm_recursion(const CouplingPath& path, HalfInt m,
                               const AssignmentPolicy& policy);

// Last-emitter column sums: (S'+m+1/2, S'-m+1/2) for an ascent,
// (-1, +1) for a descent.
bool check_sum_identities(const CouplingPath& path, HalfInt m,
                          const SetupConfig& cfg);

// Compiles `trials` seeded-random layouts and requires each output state
// to be identical (not merely proportional) to the canonical one.
bool check_assignment_invariance(const CouplingPath& path, HalfInt m,
                                 int trials, std::uint64_t seed);

enum class RatioCheck { holds, fails, skipped };

// For the two sibling targets (prefix, m-1/2) and (prefix, m+1/2) of a
// path of length n >= 2, the proportionality constants obey
//   A1 / A2 = sqrt((S'+m+1/2) / (S'-m+1/2))
// in the normalized-over-raw orientation, i.e. ratio2 = t * ratio1 with
// t the square root above. Returns skipped when a sibling's m is out of
// range (one of the two branch coefficients vanishes there).
RatioCheck check_ratio_constraint(const CouplingPath& path, HalfInt m,
                                  const AssignmentPolicy& policy);

struct SweepCounts {
    int checked = 0;
    int passed = 0;
    int skipped = 0;
};

struct SweepItem {
    std::string path;
    std::string m;
    bool holds = false;
    bool skipped = false;
    std::string ratio; // empty for checks that have no ratio
};

struct SweepOptions {
    int n_max = 6;
    std::uint64_t seed = 42;
    bool with_proportionality = true;
    bool with_recursion = true;
    bool with_sums = true;
    bool with_ratio = true;
    bool with_oracle = false;
    bool with_invariance = false;
    int oracle_cap = kDefaultOracleCap;
    int oracle_random_per_n = 50;
    int invariance_trials = 100;
    int invariance_n_max = 6; // invariance is the costly check; capped separately
};

// Results keyed by check name ("proportionality", "recursion", "sums",
// "ratio", "oracle", "invariance"): per-item records plus pass/checked
// counts broken down by n.
struct SweepSummary {
    int n_max = 0;
    std::uint64_t seed = 0;
    std::map<std::string, std::vector<SweepItem>> items;
    std::map<std::string, std::map<int, SweepCounts>> counts;
    bool all_passed = true;
};

// Runs every (path, m) with path length 2..n_max through the enabled
// checks under the canonical policy. Deterministic given the options.
SweepSummary full_sweep(const SweepOptions& opts);

} // namespace spinweave
