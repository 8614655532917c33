#include "spinweave/sparse_state.hpp"

#include <cassert>

#include "spinweave/errors.hpp"

namespace spinweave {

bool is_valid_basis_string(std::string_view basis) {
    return !basis.empty() && basis.find_first_not_of("+-") == std::string_view::npos;
}

HalfInt magnetization(std::string_view basis) {
    int doubled = 0;
    for (char c : basis) doubled += c == '+' ? 1 : -1;
    return HalfInt::from_doubled(doubled);
}

SparseState::SparseState(int n) : n_(n) {
    assert(n >= 1);
}

RadicalAmplitude SparseState::at(const BasisString& basis) const {
    auto it = amps_.find(basis);
    return it == amps_.end() ? RadicalAmplitude{} : it->second;
}

void SparseState::set(const BasisString& basis, RadicalAmplitude amp) {
    if (basis.size() != static_cast<std::size_t>(n_))
        throw DimensionMismatch("basis string '" + basis + "' is not of length " +
                                std::to_string(n_));
    if (!is_valid_basis_string(basis))
        throw Error("basis string must be over {+,-}: '" + basis + "'");
    if (amp.is_zero())
        amps_.erase(basis);
    else
        amps_.insert_or_assign(basis, std::move(amp));
}

void SparseState::add(const BasisString& basis, const RadicalAmplitude& amp) {
    if (amp.is_zero()) return;
    auto it = amps_.find(basis);
    if (it == amps_.end()) {
        set(basis, amp);
        return;
    }
    it->second += amp;
    if (it->second.is_zero()) amps_.erase(it);
}

SparseState SparseState::scaled(const RadicalAmplitude& factor) const {
    SparseState out(n_);
    if (factor.is_zero()) return out;
    for (const auto& [basis, amp] : amps_) out.amps_.emplace(basis, factor * amp);
    return out;
}

SparseState SparseState::extended(char sign) const {
    assert(sign == '+' || sign == '-');
    SparseState out(n_ + 1);
    for (const auto& [basis, amp] : amps_) out.amps_.emplace(basis + sign, amp);
    return out;
}

SparseState SparseState::flipped() const {
    SparseState out(n_);
    for (const auto& [basis, amp] : amps_) {
        BasisString mirrored = basis;
        for (char& c : mirrored) c = c == '+' ? '-' : '+';
        out.amps_.emplace(std::move(mirrored), amp);
    }
    return out;
}

void SparseState::add_state(const SparseState& other) {
    if (other.n_ != n_)
        throw DimensionMismatch("cannot add a " + std::to_string(other.n_) +
                                "-qubit state to a " + std::to_string(n_) + "-qubit state");
    for (const auto& [basis, amp] : other.amps_) add(basis, amp);
}

RadicalAmplitude inner_product(const SparseState& a, const SparseState& b) {
    if (a.qubit_count() != b.qubit_count())
        throw DimensionMismatch("inner product of " + std::to_string(a.qubit_count()) +
                                "- and " + std::to_string(b.qubit_count()) + "-qubit states");
    const SparseState& small = a.support_size() <= b.support_size() ? a : b;
    const SparseState& large = a.support_size() <= b.support_size() ? b : a;
    RadicalAmplitude total;
    for (const auto& [basis, amp] : small.amplitudes()) {
        RadicalAmplitude other = large.at(basis);
        if (!other.is_zero()) total += amp * other;
    }
    return total;
}

} // namespace spinweave
