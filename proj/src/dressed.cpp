#include "yfluor/dressed.hpp"

#include <cmath>

#include "yfluor/linalg.hpp"

namespace yfluor {

const char* dressed_label_name(DressedLabel label) {
  switch (label) {
    case DressedLabel::d: return "d";
    case DressedLabel::m: return "m";
    case DressedLabel::plus: return "plus";
    case DressedLabel::minus: return "minus";
    case DressedLabel::generic: return "generic";
  }
  return "?";
}

std::array<double, 16> hamiltonian_matrix(const AtomParams& params) {
  validate(params);
  std::array<double, 16> h{};
  h[0 * 4 + 0] = params.delta_a + params.delta_b;
  h[1 * 4 + 1] = params.delta_a + params.delta_b - params.w12;
  h[2 * 4 + 2] = params.delta_b;
  h[3 * 4 + 3] = 0.0;
  h[0 * 4 + 2] = h[2 * 4 + 0] = -params.omega1;
  h[1 * 4 + 2] = h[2 * 4 + 1] = -params.omega2;
  h[2 * 4 + 3] = h[3 * 4 + 2] = -params.omega3;
  return h;
}

std::array<DressedState, 4> dressed_states(const AtomParams& params) {
  const std::array<double, 16> h = hamiltonian_matrix(params);
  const SymmetricEigen eig = eig_symmetric(h, 4);

  for (int i = 0; i + 1 < 4; ++i) {
    if (std::abs(eig.values[i + 1] - eig.values[i]) < 1e-9) {
      throw DegenerateSpectrum("dressed eigenvalues " + std::to_string(i + 1) +
                               " and " + std::to_string(i + 2) +
                               " coincide; labels are not well defined");
    }
  }

  std::array<DressedState, 4> states;
  for (int k = 0; k < 4; ++k) {
    states[k].lambda = eig.values[k];
    for (int i = 0; i < 4; ++i) states[k].c[i] = eig.vectors[k * 4 + i];
    // sign convention: first non-negligible coefficient positive
    for (int i = 0; i < 4; ++i) {
      if (std::abs(states[k].c[i]) > 1e-9) {
        if (states[k].c[i] < 0) {
          for (int j = 0; j < 4; ++j) states[k].c[j] = -states[k].c[j];
        }
        break;
      }
    }
  }

  const bool two_photon_resonant =
      std::abs(params.delta_a) < 1e-12 && std::abs(params.delta_b) < 1e-12;
  if (two_photon_resonant) {
    for (auto& st : states) {
      if (std::abs(st.lambda) < 1e-9) st.label = DressedLabel::d;
    }
    const bool closed_form_regime =
        std::abs(params.omega1 - params.omega2) < 1e-12 &&
        std::abs(params.omega3 - 0.5 * params.w12) < 1e-12;
    if (closed_form_regime) {
      const double w = params.w12;
      const double omega = params.omega1;
      const double lambda_m = -0.5 * w;
      const double root = std::sqrt(w * w + 32.0 * (omega * omega + 0.25 * w * w));
      const double lambda_plus = 0.25 * (-w + root);
      const double lambda_minus = 0.25 * (-w - root);
      for (auto& st : states) {
        if (st.label != DressedLabel::generic) continue;
        if (std::abs(st.lambda - lambda_m) < 1e-8) st.label = DressedLabel::m;
        else if (std::abs(st.lambda - lambda_plus) < 1e-8) st.label = DressedLabel::plus;
        else if (std::abs(st.lambda - lambda_minus) < 1e-8) st.label = DressedLabel::minus;
      }
    }
  }
  return states;
}

std::array<double, 4> dressed_populations(const DensityMatrix& rho,
                                          const std::array<DressedState, 4>& states) {
  std::array<double, 4> pops{};
  for (int k = 0; k < 4; ++k) {
    Complex acc = 0.0;
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        acc += states[k].c[m - 1] * rho(m, n) * states[k].c[n - 1];
      }
    }
    pops[k] = acc.real();
  }
  return pops;
}

SymAntisymRecord sym_antisym(const DensityMatrix& rho, const AtomParams& params) {
  const double g1 = params.gamma1, g2 = params.gamma2;
  const double total = g1 + g2;
  if (!(total > 0)) {
    throw InvalidRate("sym_antisym requires gamma1 + gamma2 > 0");
  }
  const double cross = std::sqrt(g1 * g2);
  SymAntisymRecord rec;
  rec.rho_ss = ((g1 * rho(1, 1) + g2 * rho(2, 2)).real() +
                cross * (rho(1, 2) + rho(2, 1)).real()) / total;
  rec.rho_aa = ((g2 * rho(1, 1) + g1 * rho(2, 2)).real() -
                cross * (rho(1, 2) + rho(2, 1)).real()) / total;
  rec.rho_sa = (cross * (rho(1, 1) - rho(2, 2)) - g1 * rho(1, 2) + g2 * rho(2, 1)) / total;
  return rec;
}

TransitionRates transition_rates(const std::array<DressedState, 4>& states,
                                 const AtomParams& params) {
  TransitionRates rates;
  for (int i = 0; i < 4; ++i) {
    const double c1 = states[i].c[0];
    const double c2 = states[i].c[1];
    const double c3 = states[i].c[2];
    const double upper = c1 * c1 + c2 * c2 + 2.0 * params.p * c1 * c2;
    for (int j = 0; j < 4; ++j) {
      const double c3f = states[j].c[2];
      const double c4f = states[j].c[3];
      rates.a[i][j] = upper * c3f * c3f;
      rates.b[i][j] = c3 * c3 * c4f * c4f;
    }
  }
  return rates;
}

}  // namespace yfluor
