#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace yfluor {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Error taxonomy. Everything thrown by the library derives from Error, so
// callers can catch the whole family or individual conditions.
// ---------------------------------------------------------------------------
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidP : Error { using Error::Error; };
struct InvalidRate : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct SingularLiouvillian : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct StepTooLarge : Error { using Error::Error; };
struct NotConverged : Error { using Error::Error; };

/// Physical parameters of the driven four-level Y scheme. All rates and
/// frequencies are expressed in units of gamma3 (half decay rate of the
/// intermediate-to-ground transition), so gamma3 = 1 in normal use.
///
/// Level layout: |1>,|2> excited doublet (splitting w12), |3> intermediate,
/// |4> ground. gamma1/gamma2 are the half decay rates of |1>->|3|, |2>->|3>;
/// omega1/omega2 couple the upper transitions to one field (detuning
/// delta_a), omega3 couples |3><->|4> to the other (detuning delta_b). The
/// interference parameter p is the normalized dot product of the two upper
/// transition dipoles: p = +-1 maximal interference, p = 0 none.
struct AtomParams {
  double gamma1 = 0.5;
  double gamma2 = 0.5;
  double gamma3 = 1.0;
  double w12 = 0.0;
  double delta_a = 0.0;
  double delta_b = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
  double p = 1.0;
};

/// Throws InvalidP if |p| > 1, InvalidRate if gamma1/gamma2 < 0, gamma3 <= 0,
/// or any field is non-finite.
void validate(const AtomParams& params);

/// 4x4 complex density matrix over the bare states |1>..|4>. Indices are
/// 1-based to match the level names used throughout (rho(1,3) is the
/// coherence between the upper excited state and the intermediate state).
class DensityMatrix {
 public:
  DensityMatrix() : m_{} {}

  /// Pure state |level><level|, level in 1..4.
  static DensityMatrix pure(int level);

  Complex operator()(int row, int col) const { return m_[idx(row, col)]; }
  Complex& operator()(int row, int col) { return m_[idx(row, col)]; }

  /// Sets (row,col) and the mirror element (col,row) = conj(value).
  void set_pair(int row, int col, Complex value) {
    m_[idx(row, col)] = value;
    m_[idx(col, row)] = std::conj(value);
  }

  Complex trace() const {
    return m_[0] + m_[5] + m_[10] + m_[15];
  }

 private:
  static int idx(int row, int col) { return 4 * (row - 1) + (col - 1); }
  std::array<Complex, 16> m_;
};

// Slot layout of the 15-component coherence vector. The diagonal element
// rho44 is never stored: it is always 1 - rho11 - rho22 - rho33.
enum PsiIndex : int {
  kRho11 = 0, kRho22, kRho33,
  kRho12, kRho13, kRho23, kRho14, kRho24, kRho34,
  kRho21, kRho31, kRho32, kRho41, kRho42, kRho43,
};

inline constexpr int kPsiSize = 15;

/// Index involution pairing each slot with its conjugate slot (fixes the
/// three populations, swaps kRho12<->kRho21 and so on).
int conjugate_slot(int slot);

/// Density-matrix elements flattened into the fixed 15-slot ordering above.
/// For a physical state the conjugate slots carry conjugate values and the
/// three population slots are real; the type itself does not enforce this
/// (spectral calculations run the same machinery on non-Hermitian vectors).
struct CoherenceVector {
  std::array<Complex, kPsiSize> v{};

  Complex& operator[](int slot) { return v[slot]; }
  Complex operator[](int slot) const { return v[slot]; }
};

/// Flattens rho into the coherence vector (drops rho44).
CoherenceVector pack(const DensityMatrix& rho);

/// Inverse of pack; restores rho44 = 1 - rho11 - rho22 - rho33. Round-trips
/// exactly: unpack(pack(rho)) == rho for unit-trace rho.
DensityMatrix unpack(const CoherenceVector& psi);

}  // namespace yfluor
