#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "yfluor/liouvillian.hpp"

using namespace yfluor;

namespace {

CoherenceVector apply(const LiouvillianSystem& sys, const CoherenceVector& psi) {
  CoherenceVector out;
  for (int r = 0; r < kPsiSize; ++r) {
    Complex acc = sys.inhom[r];
    for (int c = 0; c < kPsiSize; ++c) acc += sys.L(r, c) * psi[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("undriven row for the top population is pure decay") {
  AtomParams params;
  params.gamma1 = 1.7;
  params.gamma2 = 0.4;
  params.omega1 = params.omega2 = params.omega3 = 0.0;
  params.p = 0.0;
  const LiouvillianSystem sys = build_liouvillian(params);
  for (int c = 0; c < kPsiSize; ++c) {
    if (c == kRho11) {
      CHECK(sys.L(kRho11, c) == Complex(-2.0 * params.gamma1));
    } else {
      CHECK(sys.L(kRho11, c) == Complex(0.0));
    }
  }
}

TEST_CASE("inhomogeneous vector holds only the two driving entries") {
  std::mt19937 rng(42);
  for (int draw = 0; draw < 5; ++draw) {
    const AtomParams params = testutil::random_params(rng);
    const LiouvillianSystem sys = build_liouvillian(params);
    for (int i = 0; i < kPsiSize; ++i) {
      if (i == kRho34) {
        CHECK(sys.inhom[i] == Complex(0.0, params.omega3));
      } else if (i == kRho43) {
        CHECK(sys.inhom[i] == Complex(0.0, -params.omega3));
      } else {
        CHECK(sys.inhom[i] == Complex(0.0));
      }
    }
  }
}

TEST_CASE("conjugation symmetry of L and I") {
  std::mt19937 rng(43);
  const AtomParams params = testutil::random_params(rng);
  const LiouvillianSystem sys = build_liouvillian(params);
  for (int r = 0; r < kPsiSize; ++r) {
    for (int c = 0; c < kPsiSize; ++c) {
      const Complex mirrored = sys.L(conjugate_slot(r), conjugate_slot(c));
      CHECK(std::abs(mirrored - std::conj(sys.L(r, c))) == 0.0);
    }
    CHECK(sys.inhom[conjugate_slot(r)] == std::conj(sys.inhom[r]));
  }
}

TEST_CASE("matrix builder and direct transcription agree on 100 random draws") {
  std::mt19937 rng(2024);
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const AtomParams params = testutil::random_params(rng, 0.0);
    const LiouvillianSystem sys = build_liouvillian(params);
    // both arbitrary complex vectors and physical ones
    const CoherenceVector psi = (draw % 2 == 0)
                                    ? testutil::random_psi(rng)
                                    : pack(testutil::random_physical_rho(rng));
    const CoherenceVector via_matrix = apply(sys, psi);
    const CoherenceVector via_rhs = master_rhs(params, psi);
    for (int i = 0; i < kPsiSize; ++i) {
      worst = std::max(worst, std::abs(via_matrix[i] - via_rhs[i]));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("pure decay from the top level") {
  AtomParams params;
  params.gamma1 = 1.3;
  params.gamma2 = 0.8;
  params.omega1 = params.omega2 = params.omega3 = 0.0;
  params.p = 0.0;
  const CoherenceVector d = master_rhs(params, pack(DensityMatrix::pure(1)));
  CHECK(d[kRho11] == Complex(-2.0 * params.gamma1));
  CHECK(d[kRho33] == Complex(2.0 * params.gamma1));
  for (int i = 0; i < kPsiSize; ++i) {
    if (i != kRho11 && i != kRho33) CHECK(d[i] == Complex(0.0));
  }
}

TEST_CASE("interference seeds the excited coherence from the populations") {
  AtomParams params;
  params.gamma1 = params.gamma2 = 0.9;
  params.omega1 = params.omega2 = params.omega3 = 0.0;
  params.p = 1.0;
  const CoherenceVector d = master_rhs(params, pack(DensityMatrix::pure(1)));
  const double pg = std::sqrt(params.gamma1 * params.gamma2);
  CHECK(d[kRho12].real() == doctest::Approx(-pg).epsilon(1e-15));
  CHECK(d[kRho12].imag() == 0.0);
  CHECK(d[kRho21].real() == doctest::Approx(-pg).epsilon(1e-15));
}

TEST_CASE("the ground state is driven only through the lower coherences") {
  std::mt19937 rng(77);
  const AtomParams params = testutil::random_params(rng);
  const CoherenceVector d = master_rhs(params, CoherenceVector{});  // rho = |4><4|
  for (int i = 0; i < kPsiSize; ++i) {
    if (i == kRho34) {
      CHECK(d[i] == Complex(0.0, params.omega3));
    } else if (i == kRho43) {
      CHECK(d[i] == Complex(0.0, -params.omega3));
    } else {
      CHECK(d[i] == Complex(0.0));
    }
  }
}

TEST_CASE("trace is conserved once the eliminated population is restored") {
  std::mt19937 rng(555);
  for (int draw = 0; draw < 20; ++draw) {
    const AtomParams params = testutil::random_params(rng, 0.0);
    const CoherenceVector psi = pack(testutil::random_physical_rho(rng));
    const CoherenceVector d = master_rhs(params, psi);
    // the eliminated equation, rebuilt only here:
    // d rho44 = 2 gamma3 rho33 + i omega3 (rho34 - rho43)
    const Complex d44 = 2.0 * params.gamma3 * psi[kRho33] +
                        Complex(0, params.omega3) * (psi[kRho34] - psi[kRho43]);
    const Complex total = d[kRho11] + d[kRho22] + d[kRho33] + d44;
    CHECK(std::abs(total) <= 1e-12);
  }
}

TEST_CASE("conjugate pairing is preserved by the flow") {
  std::mt19937 rng(556);
  for (int draw = 0; draw < 20; ++draw) {
    const AtomParams params = testutil::random_params(rng, 0.0);
    const CoherenceVector psi = pack(testutil::random_physical_rho(rng));
    const CoherenceVector d = master_rhs(params, psi);
    for (int k = 0; k < kPsiSize; ++k) {
      CHECK(std::abs(d[k] - std::conj(d[conjugate_slot(k)])) <= 1e-13);
    }
  }
}

TEST_CASE("the generator is affine-linear in the interference parameter") {
  std::mt19937 rng(557);
  AtomParams params = testutil::random_params(rng);
  params.p = 0.0;
  const LiouvillianSystem l0 = build_liouvillian(params);
  params.p = 1.0;
  const LiouvillianSystem l1 = build_liouvillian(params);
  params.p = 0.37;
  const LiouvillianSystem lp = build_liouvillian(params);
  for (int r = 0; r < kPsiSize; ++r) {
    for (int c = 0; c < kPsiSize; ++c) {
      const Complex expected = l0.L(r, c) + 0.37 * (l1.L(r, c) - l0.L(r, c));
      CHECK(std::abs(lp.L(r, c) - expected) <= 1e-14);
    }
  }
}
