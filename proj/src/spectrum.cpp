#include "yfluor/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace yfluor {

namespace {
constexpr Complex kI{0.0, 1.0};

LuFactor lu_of_liouvillian(const LiouvillianSystem& sys) {
  try {
    return LuFactor(sys.L);
  } catch (const SingularMatrix&) {
    throw SingularLiouvillian("spectrum requires a unique steady state");
  }
}

std::array<Complex, kPsiSize> steady_coherences(const LuFactor& lu_of_L,
                                                const LiouvillianSystem& sys) {
  std::array<Complex, kPsiSize> rhs;
  for (int i = 0; i < kPsiSize; ++i) rhs[i] = -sys.inhom[i];
  const std::vector<Complex> psi = lu_of_L.solve(rhs);
  std::array<Complex, kPsiSize> out;
  std::copy(psi.begin(), psi.end(), out.begin());
  return out;
}

}  // namespace

Resolvent resolvent(const LiouvillianSystem& sys, Complex z) {
  const int n = kPsiSize;
  ComplexMatrix shifted(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) shifted(r, c) = -sys.L(r, c);
    shifted(r, r) += z;
  }
  Resolvent res;
  res.M = inverse(shifted);
  res.N = LuFactor(sys.L).solve(res.M);
  return res;
}

SpectrumSeries spectrum_a(const AtomParams& params, const std::vector<double>& offsets) {
  const LiouvillianSystem sys = build_liouvillian(params);
  const LuFactor lu_of_L = lu_of_liouvillian(sys);
  const auto bar = steady_coherences(lu_of_L, sys);
  const double p = params.p;

  SpectrumSeries series;
  series.channel = Channel::a;
  series.offsets = offsets;
  series.values.reserve(offsets.size());

  const int n = kPsiSize;
  ComplexMatrix shifted(n, n);
  for (double nu : offsets) {
    const Complex z = kI * nu;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) shifted(r, c) = -sys.L(r, c);
      shifted(r, r) += z;
    }
    const ComplexMatrix M = inverse(shifted);
    const ComplexMatrix N = lu_of_L.solve(M);

    Complex ni_31 = 0.0, ni_32 = 0.0;  // (N * I) picked up on the two rows
    for (int j = 0; j < n; ++j) {
      ni_31 += N(kRho31, j) * sys.inhom[j];
      ni_32 += N(kRho32, j) * sys.inhom[j];
    }

    const Complex bracket1 = M(kRho31, kRho34) * bar[kRho14] +
                             M(kRho31, kRho33) * bar[kRho13] +
                             M(kRho31, kRho32) * bar[kRho12] +
                             M(kRho31, kRho31) * bar[kRho11] + ni_31 * bar[kRho13];
    const Complex bracket2 = M(kRho32, kRho34) * bar[kRho14] +
                             M(kRho32, kRho33) * bar[kRho13] +
                             M(kRho32, kRho32) * bar[kRho12] +
                             M(kRho32, kRho31) * bar[kRho11] + ni_32 * bar[kRho13];
    const Complex bracket3 = M(kRho31, kRho31) * bar[kRho21] +
                             M(kRho31, kRho34) * bar[kRho24] +
                             M(kRho31, kRho33) * bar[kRho23] +
                             M(kRho31, kRho32) * bar[kRho22] + ni_31 * bar[kRho23];
    const Complex bracket4 = M(kRho32, kRho31) * bar[kRho21] +
                             M(kRho32, kRho34) * bar[kRho24] +
                             M(kRho32, kRho33) * bar[kRho23] +
                             M(kRho32, kRho32) * bar[kRho22] + ni_32 * bar[kRho23];
    series.values.push_back((bracket1 + p * bracket2 + p * bracket3 + bracket4).real());
  }
  return series;
}

SpectrumSeries spectrum_b(const AtomParams& params, const std::vector<double>& offsets) {
  const LiouvillianSystem sys = build_liouvillian(params);
  const LuFactor lu_of_L = lu_of_liouvillian(sys);
  const auto bar = steady_coherences(lu_of_L, sys);

  SpectrumSeries series;
  series.channel = Channel::b;
  series.offsets = offsets;
  series.values.reserve(offsets.size());

  const int n = kPsiSize;
  ComplexMatrix shifted(n, n);
  for (double nu : offsets) {
    const Complex z = kI * nu;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) shifted(r, c) = -sys.L(r, c);
      shifted(r, r) += z;
    }
    const ComplexMatrix M = inverse(shifted);
    const ComplexMatrix N = lu_of_L.solve(M);

    Complex ni_43 = 0.0;
    for (int j = 0; j < n; ++j) ni_43 += N(kRho43, j) * sys.inhom[j];

    const Complex bracket = M(kRho43, kRho41) * bar[kRho31] +
                            M(kRho43, kRho42) * bar[kRho32] +
                            M(kRho43, kRho43) * bar[kRho33] + ni_43 * bar[kRho34];
    series.values.push_back(bracket.real());
  }
  return series;
}

namespace {

// One quantum-regression integration: d x / d tau = L x + I * weight,
// started from the stationary two-time product.
struct Regression {
  std::array<Complex, kPsiSize> x{};        // current state
  std::array<Complex, kPsiSize> asymptote{};  // coherent part, subtracted out
  Complex weight{};                          // <B>_ss multiplying I
};

}  // namespace

SpectrumSeries spectrum_oracle(const AtomParams& params, Channel channel,
                               const std::vector<double>& offsets,
                               const OracleOptions& options) {
  const LiouvillianSystem sys = build_liouvillian(params);
  const LuFactor lu_of_L = lu_of_liouvillian(sys);
  const auto bar = steady_coherences(lu_of_L, sys);
  const double p = params.p;

  // Regression initial conditions: the steady-state factors that multiply
  // each resolvent column, placed in the slots whose operator overlaps B.
  // The correlation read out afterwards is sum over taps of
  // mix * x[reg_of][slot], minus the same combination of asymptotes.
  std::vector<Regression> unique_regs;
  std::vector<Complex> mix;
  std::vector<int> slot, reg_of;
  if (channel == Channel::a) {
    Regression r1;  // B = |3><1|
    r1.x[kRho33] = bar[kRho13];
    r1.x[kRho34] = bar[kRho14];
    r1.x[kRho31] = bar[kRho11];
    r1.x[kRho32] = bar[kRho12];
    r1.weight = bar[kRho13];
    Regression r2;  // B = |3><2|
    r2.x[kRho33] = bar[kRho23];
    r2.x[kRho34] = bar[kRho24];
    r2.x[kRho31] = bar[kRho21];
    r2.x[kRho32] = bar[kRho22];
    r2.weight = bar[kRho23];
    unique_regs = {r1, r2};
    mix = {1.0, p, p, 1.0};
    slot = {kRho31, kRho32, kRho31, kRho32};
    reg_of = {0, 0, 1, 1};
  } else {
    Regression r;  // B = |4><3|
    r.x[kRho41] = bar[kRho31];
    r.x[kRho42] = bar[kRho32];
    r.x[kRho43] = bar[kRho33];
    r.weight = bar[kRho34];
    unique_regs = {r};
    mix = {1.0};
    slot = {kRho43};
    reg_of = {0};
  }
  // Asymptote of each regression: -L^-1 I * weight (the coherent part).
  for (auto& reg : unique_regs) {
    for (int i = 0; i < kPsiSize; ++i) reg.asymptote[i] = bar[i] * reg.weight;
  }

  double nu_max = 1.0;
  for (double nu : offsets) nu_max = std::max(nu_max, std::abs(nu));
  const double h = options.dt_factor / std::max(1.0, sys.L.inf_norm() + nu_max);

  // Incoherent correlation at a given set of regression states.
  auto correlation = [&](const std::vector<std::array<Complex, kPsiSize>>& states) {
    Complex c = 0.0;
    for (size_t k = 0; k < mix.size(); ++k) {
      const auto& st = states[reg_of[k]];
      const auto& as = unique_regs[reg_of[k]].asymptote;
      c += mix[k] * (st[slot[k]] - as[slot[k]]);
    }
    return c;
  };

  auto rhs_of = [&](const std::array<Complex, kPsiSize>& x, Complex weight,
                    std::array<Complex, kPsiSize>& out) {
    for (int r = 0; r < kPsiSize; ++r) {
      Complex acc = sys.inhom[r] * weight;
      for (int c = 0; c < kPsiSize; ++c) acc += sys.L(r, c) * x[c];
      out[r] = acc;
    }
  };

  const size_t nreg = unique_regs.size();
  std::vector<std::array<Complex, kPsiSize>> x(nreg), k1(nreg), k2(nreg), k3(nreg),
      k4(nreg), stage(nreg);
  for (size_t r = 0; r < nreg; ++r) x[r] = unique_regs[r].x;

  double initial_residual = 0.0;
  for (size_t r = 0; r < nreg; ++r) {
    for (int i = 0; i < kPsiSize; ++i) {
      initial_residual = std::max(
          initial_residual, std::abs(x[r][i] - unique_regs[r].asymptote[i]));
    }
  }

  const size_t nf = offsets.size();
  std::vector<Complex> F(nf, 0.0);
  std::vector<Complex> phase(nf, 1.0), half_step(nf);
  for (size_t i = 0; i < nf; ++i) {
    half_step[i] = std::exp(-kI * offsets[i] * (0.5 * h));
  }

  double min_gamma = params.gamma3;
  if (params.gamma1 > 0) min_gamma = std::min(min_gamma, params.gamma1);
  if (params.gamma2 > 0) min_gamma = std::min(min_gamma, params.gamma2);
  const double t_min = std::min(20.0 / min_gamma, options.t_max);

  double t = 0.0;
  bool converged = initial_residual == 0.0;
  const double check_interval = 5.0;
  double next_check = check_interval;
  while (!converged) {
    // RK4 stages for every regression vector
    for (size_t r = 0; r < nreg; ++r) rhs_of(x[r], unique_regs[r].weight, k1[r]);
    const Complex c1 = correlation(x);
    for (size_t r = 0; r < nreg; ++r)
      for (int i = 0; i < kPsiSize; ++i) stage[r][i] = x[r][i] + 0.5 * h * k1[r][i];
    for (size_t r = 0; r < nreg; ++r) rhs_of(stage[r], unique_regs[r].weight, k2[r]);
    const Complex c2 = correlation(stage);
    for (size_t r = 0; r < nreg; ++r)
      for (int i = 0; i < kPsiSize; ++i) stage[r][i] = x[r][i] + 0.5 * h * k2[r][i];
    for (size_t r = 0; r < nreg; ++r) rhs_of(stage[r], unique_regs[r].weight, k3[r]);
    const Complex c3 = correlation(stage);
    for (size_t r = 0; r < nreg; ++r)
      for (int i = 0; i < kPsiSize; ++i) stage[r][i] = x[r][i] + h * k3[r][i];
    for (size_t r = 0; r < nreg; ++r) rhs_of(stage[r], unique_regs[r].weight, k4[r]);
    const Complex c4 = correlation(stage);

    for (size_t r = 0; r < nreg; ++r) {
      for (int i = 0; i < kPsiSize; ++i) {
        x[r][i] += (h / 6.0) * (k1[r][i] + 2.0 * k2[r][i] + 2.0 * k3[r][i] + k4[r][i]);
      }
    }

    // Matching RK4 update of F_nu = integral of C_inc(tau) e^{-i nu tau}.
    const Complex c23 = 2.0 * (c2 + c3);
    for (size_t i = 0; i < nf; ++i) {
      const Complex m = half_step[i];
      F[i] += (h / 6.0) * phase[i] * (c1 + (c23 + c4 * m) * m);
      phase[i] *= m * m;
    }

    t += h;
    if (t >= next_check) {
      next_check += check_interval;
      double residual = 0.0;
      for (size_t r = 0; r < nreg; ++r) {
        for (int i = 0; i < kPsiSize; ++i) {
          residual = std::max(residual,
                              std::abs(x[r][i] - unique_regs[r].asymptote[i]));
        }
      }
      if (t >= t_min && residual <= options.decay_target * initial_residual) {
        converged = true;
      } else if (t >= options.t_max) {
        if (residual > 1e-8 * initial_residual) {
          throw NotConverged(
              "correlation did not decay within the integration window");
        }
        converged = true;
      }
    }
  }

  SpectrumSeries series;
  series.channel = channel;
  series.offsets = offsets;
  series.values.resize(nf);
  for (size_t i = 0; i < nf; ++i) series.values[i] = F[i].real();
  return series;
}

}  // namespace yfluor
