#include "yfluor/liouvillian.hpp"

#include <cmath>

namespace yfluor {

namespace {
constexpr Complex kI{0.0, 1.0};
}

LiouvillianSystem build_liouvillian(const AtomParams& params) {
  validate(params);
  const double g1 = params.gamma1, g2 = params.gamma2, g3 = params.gamma3;
  const double w12 = params.w12, da = params.delta_a, db = params.delta_b;
  const double o1 = params.omega1, o2 = params.omega2, o3 = params.omega3;
  const double pg = params.p * std::sqrt(g1 * g2);

  LiouvillianSystem sys;
  sys.params = params;
  sys.L = ComplexMatrix(kPsiSize, kPsiSize);
  ComplexMatrix& L = sys.L;

  // rho11
  L(kRho11, kRho11) = -2.0 * g1;
  L(kRho11, kRho31) = kI * o1;
  L(kRho11, kRho13) = -kI * o1;
  L(kRho11, kRho12) = -pg;
  L(kRho11, kRho21) = -pg;
  // rho22
  L(kRho22, kRho22) = -2.0 * g2;
  L(kRho22, kRho32) = kI * o2;
  L(kRho22, kRho23) = -kI * o2;
  L(kRho22, kRho12) = -pg;
  L(kRho22, kRho21) = -pg;
  // rho33
  L(kRho33, kRho11) = 2.0 * g1;
  L(kRho33, kRho22) = 2.0 * g2;
  L(kRho33, kRho33) = -2.0 * g3;
  L(kRho33, kRho13) = kI * o1;
  L(kRho33, kRho31) = -kI * o1;
  L(kRho33, kRho23) = kI * o2;
  L(kRho33, kRho32) = -kI * o2;
  L(kRho33, kRho43) = kI * o3;
  L(kRho33, kRho34) = -kI * o3;
  L(kRho33, kRho12) = 2.0 * pg;
  L(kRho33, kRho21) = 2.0 * pg;
  // rho12
  L(kRho12, kRho12) = -(g1 + g2 + kI * w12);
  L(kRho12, kRho32) = kI * o1;
  L(kRho12, kRho13) = -kI * o2;
  L(kRho12, kRho11) = -pg;
  L(kRho12, kRho22) = -pg;
  // rho13
  L(kRho13, kRho13) = -(g1 + g3 + kI * da);
  L(kRho13, kRho33) = kI * o1;
  L(kRho13, kRho11) = -kI * o1;
  L(kRho13, kRho12) = -kI * o2;
  L(kRho13, kRho14) = -kI * o3;
  L(kRho13, kRho23) = -pg;
  // rho23
  L(kRho23, kRho23) = -(g2 + g3 + kI * (da - w12));
  L(kRho23, kRho33) = kI * o2;
  L(kRho23, kRho22) = -kI * o2;
  L(kRho23, kRho21) = -kI * o1;
  L(kRho23, kRho24) = -kI * o3;
  L(kRho23, kRho13) = -pg;
  // rho14
  L(kRho14, kRho14) = -(g1 + kI * (da + db));
  L(kRho14, kRho34) = kI * o1;
  L(kRho14, kRho13) = -kI * o3;
  L(kRho14, kRho24) = -pg;
  // rho24
  L(kRho24, kRho24) = -(g2 + kI * (da + db - w12));
  L(kRho24, kRho34) = kI * o2;
  L(kRho24, kRho23) = -kI * o3;
  L(kRho24, kRho14) = -pg;
  // rho34: the omega3*(rho44 - rho33) coupling, with rho44 expanded through
  // the unit trace, spreads over the three population slots and a constant.
  L(kRho34, kRho34) = -(g3 + kI * db);
  L(kRho34, kRho11) = -kI * o3;
  L(kRho34, kRho22) = -kI * o3;
  L(kRho34, kRho33) = -2.0 * kI * o3;
  L(kRho34, kRho14) = kI * o1;
  L(kRho34, kRho24) = kI * o2;
  sys.inhom[kRho34] = kI * o3;

  // conjugate rows
  for (int r : {kRho12, kRho13, kRho23, kRho14, kRho24, kRho34}) {
    const int rc = conjugate_slot(r);
    for (int c = 0; c < kPsiSize; ++c) {
      L(rc, conjugate_slot(c)) = std::conj(L(r, c));
    }
    sys.inhom[rc] = std::conj(sys.inhom[r]);
  }
  return sys;
}

CoherenceVector master_rhs(const AtomParams& params, const CoherenceVector& psi) {
  const double g1 = params.gamma1, g2 = params.gamma2, g3 = params.gamma3;
  const double w12 = params.w12, da = params.delta_a, db = params.delta_b;
  const double o1 = params.omega1, o2 = params.omega2, o3 = params.omega3;
  const double pg = params.p * std::sqrt(g1 * g2);

  const Complex r11 = psi[kRho11], r22 = psi[kRho22], r33 = psi[kRho33];
  const Complex r12 = psi[kRho12], r13 = psi[kRho13], r23 = psi[kRho23];
  const Complex r14 = psi[kRho14], r24 = psi[kRho24], r34 = psi[kRho34];
  const Complex r21 = psi[kRho21], r31 = psi[kRho31], r32 = psi[kRho32];
  const Complex r41 = psi[kRho41], r42 = psi[kRho42], r43 = psi[kRho43];
  const Complex r44 = 1.0 - r11 - r22 - r33;

  CoherenceVector d;
  d[kRho11] = -2.0 * g1 * r11 + kI * o1 * (r31 - r13) - pg * (r12 + r21);
  d[kRho22] = -2.0 * g2 * r22 + kI * o2 * (r32 - r23) - pg * (r12 + r21);
  d[kRho33] = 2.0 * g1 * r11 + 2.0 * g2 * r22 - 2.0 * g3 * r33 +
              kI * o1 * (r13 - r31) + kI * o2 * (r23 - r32) +
              kI * o3 * (r43 - r34) + 2.0 * pg * (r12 + r21);
  d[kRho12] = -(g1 + g2 + kI * w12) * r12 + kI * o1 * r32 - kI * o2 * r13 -
              pg * (r11 + r22);
  d[kRho13] = -(g1 + g3 + kI * da) * r13 + kI * o1 * (r33 - r11) -
              kI * o2 * r12 - kI * o3 * r14 - pg * r23;
  d[kRho23] = -(g2 + g3 + kI * (da - w12)) * r23 + kI * o2 * (r33 - r22) -
              kI * o1 * r21 - kI * o3 * r24 - pg * r13;
  d[kRho14] = -(g1 + kI * (da + db)) * r14 + kI * o1 * r34 - kI * o3 * r13 -
              pg * r24;
  d[kRho24] = -(g2 + kI * (da + db - w12)) * r24 + kI * o2 * r34 -
              kI * o3 * r23 - pg * r14;
  d[kRho34] = -(g3 + kI * db) * r34 + kI * o3 * (r44 - r33) + kI * o1 * r14 +
              kI * o2 * r24;
  // conjugate components, written out so this path never references the
  // matrix builder
  d[kRho21] = -(g1 + g2 - kI * w12) * r21 - kI * o1 * r23 + kI * o2 * r31 -
              pg * (r11 + r22);
  d[kRho31] = -(g1 + g3 - kI * da) * r31 - kI * o1 * (r33 - r11) +
              kI * o2 * r21 + kI * o3 * r41 - pg * r32;
  d[kRho32] = -(g2 + g3 - kI * (da - w12)) * r32 - kI * o2 * (r33 - r22) +
              kI * o1 * r12 + kI * o3 * r42 - pg * r31;
  d[kRho41] = -(g1 - kI * (da + db)) * r41 - kI * o1 * r43 + kI * o3 * r31 -
              pg * r42;
  d[kRho42] = -(g2 - kI * (da + db - w12)) * r42 - kI * o2 * r43 +
              kI * o3 * r32 - pg * r41;
  d[kRho43] = -(g3 - kI * db) * r43 - kI * o3 * (r44 - r33) - kI * o1 * r41 -
              kI * o2 * r42;
  return d;
}

}  // namespace yfluor
