#include "yfluor/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "yfluor/dressed.hpp"

namespace yfluor {

DensityMatrix steady_state(const AtomParams& params) {
  const LiouvillianSystem sys = build_liouvillian(params);
  std::array<Complex, kPsiSize> rhs;
  for (int i = 0; i < kPsiSize; ++i) rhs[i] = -sys.inhom[i];
  try {
    const std::vector<Complex> psi = lu_solve(sys.L, rhs);
    CoherenceVector cv;
    std::copy(psi.begin(), psi.end(), cv.v.begin());
    return unpack(cv);
  } catch (const SingularMatrix&) {
    throw SingularLiouvillian(
        "no unique steady state: the Liouvillian is singular "
        "(degenerate excited levels with maximal interference leave a "
        "decoupled, non-decaying superposition)");
  }
}

namespace {

void check_populations(const CoherenceVector& psi) {
  const double r11 = psi[kRho11].real();
  const double r22 = psi[kRho22].real();
  const double r33 = psi[kRho33].real();
  const double r44 = 1.0 - r11 - r22 - r33;
  for (double pop : {r11, r22, r33, r44}) {
    if (!(pop >= -1e-6 && pop <= 1.0 + 1e-6)) {
      throw StepTooLarge("population left [0,1] during propagation; reduce dt");
    }
  }
}

CoherenceVector step_system(const LiouvillianSystem& sys, const CoherenceVector& psi,
                            double dt) {
  std::vector<Complex> y(psi.v.begin(), psi.v.end());
  auto f = [&sys](const std::vector<Complex>& state) {
    std::vector<Complex> d = sys.L * state;
    for (int i = 0; i < kPsiSize; ++i) d[i] += sys.inhom[i];
    return d;
  };
  const std::vector<Complex> out = rk4_step(f, y, dt);
  CoherenceVector next;
  std::copy(out.begin(), out.end(), next.v.begin());
  return next;
}

}  // namespace

DensityMatrix propagate(const AtomParams& params, const DensityMatrix& rho0,
                        double t_final, double dt) {
  const LiouvillianSystem sys = build_liouvillian(params);
  CoherenceVector psi = pack(rho0);
  double t = 0.0;
  while (t < t_final - 1e-12) {
    const double h = std::min(dt, t_final - t);
    psi = step_system(sys, psi, h);
    t += h;
    check_populations(psi);
  }
  return unpack(psi);
}

StationaryResult propagate_until_stationary(const AtomParams& params,
                                            const DensityMatrix& rho0,
                                            double dt) {
  const LiouvillianSystem sys = build_liouvillian(params);
  const double t_cap = 1e3;
  CoherenceVector psi = pack(rho0);
  double t = 0.0;
  while (t < t_cap) {
    CoherenceVector next = psi;
    const int steps = static_cast<int>(std::ceil(1.0 / dt));
    const double h = 1.0 / steps;
    for (int s = 0; s < steps; ++s) next = step_system(sys, next, h);
    t += 1.0;
    check_populations(next);
    double moved = 0.0;
    for (int i = 0; i < kPsiSize; ++i) {
      moved = std::max(moved, std::abs(next[i] - psi[i]));
    }
    psi = next;
    if (moved < 1e-10) return {unpack(psi), t, true};
  }
  return {unpack(psi), t, false};
}

SweepAxis sweep_axis_from_name(const std::string& name) {
  if (name == "delta_a") return SweepAxis::delta_a;
  if (name == "delta_b") return SweepAxis::delta_b;
  if (name == "omega_all" || name == "omega") return SweepAxis::omega_all;
  if (name == "omega1") return SweepAxis::omega1;
  if (name == "omega2") return SweepAxis::omega2;
  if (name == "omega3") return SweepAxis::omega3;
  if (name == "p") return SweepAxis::p;
  if (name == "w12") return SweepAxis::w12;
  throw Error("unknown sweep axis: " + name);
}

std::string sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::delta_a: return "delta_a";
    case SweepAxis::delta_b: return "delta_b";
    case SweepAxis::omega_all: return "omega";
    case SweepAxis::omega1: return "omega1";
    case SweepAxis::omega2: return "omega2";
    case SweepAxis::omega3: return "omega3";
    case SweepAxis::p: return "p";
    case SweepAxis::w12: return "w12";
  }
  return "?";
}

namespace {

AtomParams with_axis_value(AtomParams base, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::delta_a: base.delta_a = value; break;
    case SweepAxis::delta_b: base.delta_b = value; break;
    case SweepAxis::omega_all:
      base.omega1 = base.omega2 = base.omega3 = value;
      break;
    case SweepAxis::omega1: base.omega1 = value; break;
    case SweepAxis::omega2: base.omega2 = value; break;
    case SweepAxis::omega3: base.omega3 = value; break;
    case SweepAxis::p: base.p = value; break;
    case SweepAxis::w12: base.w12 = value; break;
  }
  return base;
}

}  // namespace

SweepSeries sweep(const AtomParams& params, SweepAxis axis,
                  const std::vector<double>& grid) {
  SweepSeries series;
  series.axis = axis;
  series.grid = grid;
  series.records.reserve(grid.size());
  for (double value : grid) {
    const AtomParams point = with_axis_value(params, axis, value);
    SweepRecord rec;
    try {
      const DensityMatrix rho = steady_state(point);
      rec.ok = true;
      rec.rho11 = rho(1, 1).real();
      rec.rho22 = rho(2, 2).real();
      rec.rho33 = rho(3, 3).real();
      rec.rho44 = rho(4, 4).real();
      if (point.gamma1 + point.gamma2 > 0) {
        const SymAntisymRecord sa = sym_antisym(rho, point);
        rec.rho_ss = sa.rho_ss;
        rec.rho_aa = sa.rho_aa;
      }
    } catch (const SingularLiouvillian&) {
      rec.ok = false;  // recorded as a gap
    }
    series.records.push_back(rec);
  }
  return series;
}

double analytic_rho11(double delta_a, double omega, int p_flag) {
  if (p_flag != 0 && p_flag != 1) {
    throw InvalidP("analytic_rho11 is only available for p = 0 or p = 1");
  }
  if (!(omega > 0)) {
    throw InvalidRate("analytic_rho11 requires omega > 0");
  }
  const double d2 = delta_a * delta_a;
  const double d4 = d2 * d2, d6 = d4 * d2, d8 = d4 * d4;
  const double o2 = omega * omega;
  const double o4 = o2 * o2, o6 = o4 * o2, o8 = o4 * o4, o10 = o8 * o2;
  if (p_flag == 1) {
    const double num = o4 * d6 + 12.0 * o6 * d4 + 14.0 * o8 * d2 + 21.0 * o10;
    const double den = 2.0 * o2 * d8 + 16.0 * o4 * d6 + 52.0 * o6 * d4 +
                       2.0 * o8 * d2 + 84.0 * o10;
    return num / den;
  }
  const double num = 4.0 * o4 * d6 + 4.0 * o8 * d4 + 40.0 * o10 * d2 + 160.0 * o10;
  const double den = 8.0 * o2 * d8 + 8.0 * o6 * d6 + 64.0 * o8 * d4 +
                     240.0 * o10 * d2 + 960.0 * o10;
  return num / den;
}

std::vector<size_t> find_local_maxima(const std::vector<double>& values) {
  const size_t n = values.size();
  if (n < 3) return {};
  std::vector<double> smooth(n);
  smooth.front() = values.front();
  smooth.back() = values.back();
  for (size_t i = 1; i + 1 < n; ++i) {
    smooth[i] = (values[i - 1] + values[i] + values[i + 1]) / 3.0;
  }
  std::vector<size_t> peaks;
  for (size_t i = 1; i + 1 < n; ++i) {
    if (smooth[i] > smooth[i - 1] && smooth[i] > smooth[i + 1]) {
      peaks.push_back(i);
    }
  }
  return peaks;
}

}  // namespace yfluor
