#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yfluor/liouvillian.hpp"
#include "yfluor/types.hpp"

namespace yfluor {

/// Steady state of the master equation, psi = -L^-1 I. Throws
/// SingularLiouvillian when L has no unique fixed point; that happens for
/// degenerate excited levels (w12 = 0) with maximal interference, where the
/// antisymmetric superposition of |1> and |2> decouples completely.
DensityMatrix steady_state(const AtomParams& params);

/// Fixed-step RK4 integration of d psi/dt = L psi + I from rho0 to t_final.
/// Throws StepTooLarge if any population leaves [-1e-6, 1 + 1e-6] during the
/// run. A step dt <= 0.01 / max(rates, Rabi frequencies, detunings, w12) is
/// recommended.
DensityMatrix propagate(const AtomParams& params, const DensityMatrix& rho0,
                        double t_final, double dt);

/// Runs propagate in blocks of one time unit until the coherence vector
/// moves by less than 1e-10 (max norm) over a block, capped at t = 1e3.
/// Returns the final state and the time reached.
struct StationaryResult {
  DensityMatrix rho;
  double t_reached;
  bool converged;
};
StationaryResult propagate_until_stationary(const AtomParams& params,
                                            const DensityMatrix& rho0,
                                            double dt);

enum class SweepAxis { delta_a, delta_b, omega_all, omega1, omega2, omega3, p, w12 };

SweepAxis sweep_axis_from_name(const std::string& name);
std::string sweep_axis_name(SweepAxis axis);

/// One steady-state record per grid point. Points where the Liouvillian is
/// singular are kept in the series as gaps (ok = false) rather than failing
/// the whole sweep.
struct SweepRecord {
  bool ok = false;
  double rho11 = 0, rho22 = 0, rho33 = 0, rho44 = 0;
  double rho_ss = 0, rho_aa = 0;  // populations of the symmetric/antisymmetric pair
};

struct SweepSeries {
  SweepAxis axis;
  std::vector<double> grid;
  std::vector<SweepRecord> records;
};

/// Steady-state observables along a parameter grid. omega_all moves the
/// three Rabi frequencies together.
SweepSeries sweep(const AtomParams& params, SweepAxis axis,
                  const std::vector<double>& grid);

/// High-intensity closed forms for the excited population rho11 as a
/// function of detuning, valid for equal decay rates (all quantities in
/// units of that common rate). p_flag must be 0 or 1.
double analytic_rho11(double delta_a, double omega, int p_flag);

/// Deterministic peak detection used by the regression checks: 3-point
/// moving average first, then strictly interior local maxima of the
/// smoothed series. Returns indices into the original grid.
std::vector<size_t> find_local_maxima(const std::vector<double>& values);

}  // namespace yfluor
