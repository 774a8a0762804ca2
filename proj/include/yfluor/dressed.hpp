#pragma once

#include <array>

#include "yfluor/types.hpp"

namespace yfluor {

enum class DressedLabel { d, m, plus, minus, generic };

const char* dressed_label_name(DressedLabel label);

/// Eigenstate of the interaction Hamiltonian: eigenvalue (units of gamma3)
/// and real coefficients over the bare states |1>..|4>. The sign is fixed by
/// making the first non-negligible coefficient positive.
struct DressedState {
  double lambda = 0.0;
  std::array<double, 4> c{};
  DressedLabel label = DressedLabel::generic;
};

/// Interaction Hamiltonian in the bare basis (4x4 real symmetric, row-major,
/// units of gamma3): diagonal (da+db, da+db-w12, db, 0), couplings -omega1
/// on (1,3), -omega2 on (2,3), -omega3 on (3,4).
std::array<double, 16> hamiltonian_matrix(const AtomParams& params);

/// Numeric eigendecomposition of hamiltonian_matrix, ascending in
/// eigenvalue. Throws DegenerateSpectrum if two eigenvalues coincide within
/// 1e-9. Labels are assigned only in the regime where the closed forms
/// exist: at da = db = 0 the zero eigenvalue is the dark state |d>, and when
/// additionally omega1 = omega2 and omega3 = w12/2 the remaining states are
/// matched to |m> (lambda = -w12/2) and |+-|
/// (lambda = (-w12 +- sqrt(w12^2 + 32(omega^2 + w12^2/4))) / 4).
std::array<DressedState, 4> dressed_states(const AtomParams& params);

/// Diagonal of rho in the dressed basis, in the order of `states`.
std::array<double, 4> dressed_populations(const DensityMatrix& rho,
                                          const std::array<DressedState, 4>& states);

/// Populations and coherence of the excited doublet in the decay-weighted
/// basis |s> = (sqrt(g1)|1> + sqrt(g2)|2>)/sqrt(g1+g2),
/// |a> = (sqrt(g2)|1> - sqrt(g1)|2>)/sqrt(g1+g2).
struct SymAntisymRecord {
  double rho_ss = 0.0;
  double rho_aa = 0.0;
  Complex rho_sa{};
};

SymAntisymRecord sym_antisym(const DensityMatrix& rho, const AtomParams& params);

/// Squared dipole matrix elements for dressed-state transitions, with unit
/// dipole magnitudes. rate_a[i][j] covers emission on the upper transitions
/// from states[i] to states[j] and carries the interference cross term;
/// rate_b[i][j] covers the lower transition.
struct TransitionRates {
  std::array<std::array<double, 4>, 4> a{};
  std::array<std::array<double, 4>, 4> b{};
};

TransitionRates transition_rates(const std::array<DressedState, 4>& states,
                                 const AtomParams& params);

}  // namespace yfluor
