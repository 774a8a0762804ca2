#include "yfluor/types.hpp"

#include <cmath>

namespace yfluor {

void validate(const AtomParams& params) {
  const struct { const char* name; double value; } fields[] = {
      {"gamma1", params.gamma1}, {"gamma2", params.gamma2},
      {"gamma3", params.gamma3}, {"w12", params.w12},
      {"delta_a", params.delta_a}, {"delta_b", params.delta_b},
      {"omega1", params.omega1}, {"omega2", params.omega2},
      {"omega3", params.omega3}, {"p", params.p},
  };
  for (const auto& f : fields) {
    if (!std::isfinite(f.value)) {
      throw InvalidRate(std::string(f.name) + " is not finite");
    }
  }
  if (params.gamma1 < 0 || params.gamma2 < 0) {
    throw InvalidRate("gamma1 and gamma2 must be non-negative");
  }
  if (params.gamma3 <= 0) {
    throw InvalidRate("gamma3 must be positive");
  }
  if (std::abs(params.p) > 1.0) {
    throw InvalidP("interference parameter p must satisfy |p| <= 1");
  }
}

DensityMatrix DensityMatrix::pure(int level) {
  DensityMatrix rho;
  rho(level, level) = 1.0;
  return rho;
}

int conjugate_slot(int slot) {
  static constexpr int table[kPsiSize] = {
      kRho11, kRho22, kRho33,
      kRho21, kRho31, kRho32, kRho41, kRho42, kRho43,
      kRho12, kRho13, kRho23, kRho14, kRho24, kRho34,
  };
  return table[slot];
}

CoherenceVector pack(const DensityMatrix& rho) {
  CoherenceVector psi;
  psi[kRho11] = rho(1, 1);
  psi[kRho22] = rho(2, 2);
  psi[kRho33] = rho(3, 3);
  psi[kRho12] = rho(1, 2);
  psi[kRho13] = rho(1, 3);
  psi[kRho23] = rho(2, 3);
  psi[kRho14] = rho(1, 4);
  psi[kRho24] = rho(2, 4);
  psi[kRho34] = rho(3, 4);
  psi[kRho21] = rho(2, 1);
  psi[kRho31] = rho(3, 1);
  psi[kRho32] = rho(3, 2);
  psi[kRho41] = rho(4, 1);
  psi[kRho42] = rho(4, 2);
  psi[kRho43] = rho(4, 3);
  return psi;
}

DensityMatrix unpack(const CoherenceVector& psi) {
  DensityMatrix rho;
  rho(1, 1) = psi[kRho11];
  rho(2, 2) = psi[kRho22];
  rho(3, 3) = psi[kRho33];
  rho(1, 2) = psi[kRho12];
  rho(1, 3) = psi[kRho13];
  rho(2, 3) = psi[kRho23];
  rho(1, 4) = psi[kRho14];
  rho(2, 4) = psi[kRho24];
  rho(3, 4) = psi[kRho34];
  rho(2, 1) = psi[kRho21];
  rho(3, 1) = psi[kRho31];
  rho(3, 2) = psi[kRho32];
  rho(4, 1) = psi[kRho41];
  rho(4, 2) = psi[kRho42];
  rho(4, 3) = psi[kRho43];
  rho(4, 4) = 1.0 - psi[kRho11] - psi[kRho22] - psi[kRho33];
  return rho;
}

}  // namespace yfluor
