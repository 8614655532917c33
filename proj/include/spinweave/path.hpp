#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "spinweave/half_int.hpp"

namespace spinweave {

// Coupling history S_1,...,S_N of successive total spins. Valid histories
// start at 1/2, change by exactly 1/2 per step and never go negative; each
// one identifies a total-angular-momentum eigenstate family unambiguously.
class CouplingPath {
  public:
    // Validates the full invariant set; throws PathError.
    static CouplingPath validate(std::vector<HalfInt> spins);

    std::size_t size() const { return spins_.size(); }
    const std::vector<HalfInt>& spins() const { return spins_; }
    HalfInt final_spin() const { return spins_.back(); }

    // True if spins()[k] > spins()[k-1]; k is 0-based, k >= 1.
    bool is_ascent(std::size_t k) const { return spins_[k] > spins_[k - 1]; }

    CouplingPath prefix(std::size_t len) const;

    std::string to_string() const; // "1/2,1,1/2"

    bool operator==(const CouplingPath& other) const = default;
    bool operator<(const CouplingPath& other) const { return spins_ < other.spins_; }

  private:
    explicit CouplingPath(std::vector<HalfInt> spins) : spins_(std::move(spins)) {}

    std::vector<HalfInt> spins_;
};

// All valid length-n histories in lexicographic order of doubled-spin
// sequences, duplicate-free.
std::vector<CouplingPath> enumerate_paths(int n);

// Parses a comma-joined spin list, either in fraction form ("1/2,1,1/2")
// or doubled-integer form ("1,2,1"). The two are never ambiguous: valid
// histories in fraction form contain at least one "/2" token. Throws
// ParseError for malformed tokens and PathError for invalid histories.
CouplingPath parse_path(std::string_view text);

// True iff m is an admissible projection of s: |m| <= s and s - m integral.
bool m_in_range(HalfInt s, HalfInt m);

// All admissible m for final spin s, ascending.
std::vector<HalfInt> m_values(HalfInt s);

} // namespace spinweave
