#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spinweave/half_int.hpp"
#include "spinweave/radical.hpp"

namespace spinweave {

// Product-basis label: one character per qubit over {+,-}, emitter 1 first.
using BasisString = std::string;

bool is_valid_basis_string(std::string_view basis);

// (count of '+') minus (count of '-'), halved.
HalfInt magnetization(std::string_view basis);

// Sparse vector over the n-qubit product basis with exact radical
// amplitudes. Zero entries are never stored.
class SparseState {
  public:
    explicit SparseState(int n);

    int qubit_count() const { return n_; }
    bool is_zero() const { return amps_.empty(); }
    std::size_t support_size() const { return amps_.size(); }

    const std::map<BasisString, RadicalAmplitude>& amplitudes() const { return amps_; }

    // Zero for absent keys.
    RadicalAmplitude at(const BasisString& basis) const;

    void set(const BasisString& basis, RadicalAmplitude amp);
    void add(const BasisString& basis, const RadicalAmplitude& amp);

    SparseState scaled(const RadicalAmplitude& factor) const;
    // Tensor product with a single qubit |+> or |->: appends sign to every key.
    SparseState extended(char sign) const;
    // Global exchange of + and - on every key.
    SparseState flipped() const;

    void add_state(const SparseState& other); // += , dimensions must match

    bool operator==(const SparseState& other) const = default;

  private:
    int n_;
    std::map<BasisString, RadicalAmplitude> amps_;
};

// Sum over shared keys of the amplitude products. All amplitudes in scope
// are real, so no conjugation is involved. Throws DimensionMismatch.
RadicalAmplitude inner_product(const SparseState& a, const SparseState& b);

} // namespace spinweave
