#pragma once

#include <array>

#include "yfluor/linalg.hpp"
#include "yfluor/types.hpp"

namespace yfluor {

/// The linear generator of the coherence-vector equations of motion,
/// d psi / dt = L psi + I. L is 15x15 with time-independent entries; the
/// inhomogeneous vector I is non-zero only in the kRho34 and kRho43 slots
/// (it absorbs the constant left over when rho44 is eliminated through the
/// unit trace).
struct LiouvillianSystem {
  ComplexMatrix L;                         // 15x15
  std::array<Complex, kPsiSize> inhom{};   // I
  AtomParams params;                       // provenance
};

/// Assembles L and I entry-by-entry from the equations of motion. Rows for
/// the conjugate slots follow from the conjugation symmetry
/// L[s(j)][s(k)] = conj(L[j][k]) with s the slot involution.
LiouvillianSystem build_liouvillian(const AtomParams& params);

/// Right-hand side of the master equation evaluated directly, term by term,
/// without forming the matrix. Kept deliberately separate from
/// build_liouvillian so the two implementations cross-check each other.
CoherenceVector master_rhs(const AtomParams& params, const CoherenceVector& psi);

}  // namespace yfluor
