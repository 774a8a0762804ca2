#pragma once

#include <vector>

#include "yfluor/liouvillian.hpp"
#include "yfluor/types.hpp"

namespace yfluor {

enum class Channel { a, b };

/// Incoherent fluorescence spectrum on one emission channel. Offsets are
/// (omega - omega_a) or (omega - omega_b) in units of gamma3; values are
/// spectral densities in units of |mu|^2 / gamma3 with unit dipoles.
struct SpectrumSeries {
  Channel channel;
  std::vector<double> offsets;
  std::vector<double> values;
};

/// Resolvent pair at complex frequency z: M = (z I - L)^-1 and N = L^-1 M.
struct Resolvent {
  ComplexMatrix M;
  ComplexMatrix N;
};

Resolvent resolvent(const LiouvillianSystem& sys, Complex z);

/// Incoherent spectrum of the light emitted on the upper transitions,
/// evaluated from the resolvent at z = i * offset. Dipole conventions:
/// |mu13| = |mu23| = 1 and mu23 . mu13* = p (real).
SpectrumSeries spectrum_a(const AtomParams& params, const std::vector<double>& offsets);

/// Same for the lower transition (|mu34| = 1).
SpectrumSeries spectrum_b(const AtomParams& params, const std::vector<double>& offsets);

struct OracleOptions {
  /// RK4 step = dt_factor / (inf-norm of L + largest |offset|); the inf-norm
  /// dominates every frequency scale in the problem, so this also keeps the
  /// step below 0.005 per unit frequency.
  double dt_factor = 0.005;
  /// Integration stops once the correlation residual falls to this fraction
  /// of its initial magnitude, but never before 20 / min(gamma).
  double decay_target = 1e-10;
  /// Hard cap on the correlation time window (units of 1/gamma3).
  double t_max = 1000.0;
};

/// Independent cross-check of spectrum_a / spectrum_b: propagates the
/// quantum-regression equations in the time domain with RK4 and accumulates
/// the Fourier-Laplace integral of the incoherent correlation alongside the
/// integration (the coherent part is removed by subtracting the tau ->
/// infinity asymptote). Throws NotConverged if the correlation has not
/// decayed to 1e-8 of its initial magnitude within t_max.
SpectrumSeries spectrum_oracle(const AtomParams& params, Channel channel,
                               const std::vector<double>& offsets,
                               const OracleOptions& options = {});

}  // namespace yfluor
