#pragma once

#include "spinweave/half_int.hpp"
#include "spinweave/path.hpp"
#include "spinweave/radical.hpp"
#include "spinweave/sparse_state.hpp"

namespace spinweave {

enum class CgcBranch { up, down };

// Coefficient <j1, m - m2; 1/2, m2 | J, m> for J = j1 +- 1/2, written in
// closed form. m2 is +1/2 or -1/2 passed as HalfInt. Out-of-range first
// arguments (|m - m2| > j1, |m| > J, parity mismatch) give exact zero.
// Throws InvalidBranch for the down branch at j1 = 0 and for m2 not +-1/2.
RadicalAmplitude cgc(HalfInt j1, HalfInt m, CgcBranch branch, HalfInt m2);

// Expands the total-spin eigenstate labelled by the coupling path and
// magnetic quantum number m over the n-qubit product basis, by recursing
// on the last coupling step. Results are memoized per path prefix.
// Throws MOutOfRange unless |m| <= final spin with matching parity.
SparseState build_coupled_state(const CouplingPath& path, HalfInt m);

// Ladder and diagonal operators on product-basis states, used to verify
// eigenvalue relations. All act qubit-by-qubit and return exact states.
SparseState apply_sz(const SparseState& state);      // sum_k s_z^(k)
SparseState apply_raise(const SparseState& state);   // sum_k s_+^(k)
SparseState apply_lower(const SparseState& state);   // sum_k s_-^(k)
// S^2 = S_z^2 + (S_+ S_- + S_- S_+) / 2 applied via the operators above.
SparseState apply_s2(const SparseState& state);

} // namespace spinweave
