#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "spinweave/radical.hpp"
#include "spinweave/setup.hpp"
#include "spinweave/sparse_state.hpp"
#include "spinweave/verifier.hpp"

namespace spinweave {

// All serialization targets nlohmann::json with std::map object storage,
// so keys always come out sorted and serialize(parse(s)) == s for any s
// this module produced. Detector and emitter indices are 1-based in JSON.
using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "spinweave/1";

// {"<radicand>": "<num>/<den>", ...}; integers drop the "/1". Zero is {}.
Json amplitude_to_json(const RadicalAmplitude& amp);
RadicalAmplitude amplitude_from_json(const Json& j);

// Compact single-line form, e.g. "sqrt(6)", "-1/2*sqrt(2)", "2".
std::string radical_to_text(const RadicalAmplitude& amp);
RadicalAmplitude radical_from_text(std::string_view text);

// {"<basis string>": <amplitude object>, ...}
Json state_to_json(const SparseState& state);
SparseState state_from_json(const Json& j, int n);

// Amplitudes divided by the state norm and rendered as 15-significant-
// digit decimals, wrapped as {"approx": true, "amplitudes": {...}}.
Json normalized_to_json(const SparseState& state);

Json setup_to_json(const SetupConfig& cfg);
SetupConfig setup_from_json(const Json& j);

// {"polarizers": "-+-", "descent_pairs": {"3": [3, 2]}}
ExplicitLayout layout_from_json(const Json& j);
ExplicitLayout load_layout_file(const std::string& file);

// The full record emitted by state generation: schema, label, setup,
// both states, the proportionality constant both ways, and optionally
// the approximate normalized rendering.
Json make_state_document(const EquivalenceReport& report, const SetupConfig& cfg,
                         const SparseState& alg, const SparseState& ref,
                         bool with_normalized);

Json summary_to_json(const SweepSummary& summary);

} // namespace spinweave
