#pragma once

#include <span>
#include <vector>

#include "yfluor/types.hpp"

namespace yfluor {

/// Dense complex matrix, row-major. Sized for the problems at hand (at most
/// 15x15), so everything below is plain O(n^3) with no blocking.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Complex operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  std::span<Complex> data() { return a_; }
  std::span<const Complex> data() const { return a_; }

  /// Max row sum of absolute values (infinity norm).
  double inf_norm() const;

 private:
  int rows_, cols_;
  std::vector<Complex> a_;
};

std::vector<Complex> operator*(const ComplexMatrix& A, const std::vector<Complex>& x);
ComplexMatrix operator*(const ComplexMatrix& A, const ComplexMatrix& B);

/// Partially pivoted LU factorization, reusable for repeated solves against
/// the same matrix. Throws SingularMatrix when a pivot falls below
/// 1e-14 * inf_norm(A).
class LuFactor {
 public:
  explicit LuFactor(const ComplexMatrix& A);

  std::vector<Complex> solve(std::span<const Complex> b) const;
  ComplexMatrix solve(const ComplexMatrix& B) const;  // column-by-column

 private:
  int n_;
  ComplexMatrix lu_;
  std::vector<int> perm_;
};

/// Solves A x = b by LU with partial pivoting.
std::vector<Complex> lu_solve(const ComplexMatrix& A, std::span<const Complex> b);

/// Matrix inverse via LU.
ComplexMatrix inverse(const ComplexMatrix& A);

struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row k holds the k-th (orthonormal) eigenvector
};

/// Eigendecomposition of a real symmetric n x n matrix (row-major) by cyclic
/// Jacobi rotations. Throws NotSymmetric if |H - H^T| exceeds 1e-12 * |H|.
SymmetricEigen eig_symmetric(std::span<const double> h, int n);

/// One classical fourth-order Runge-Kutta step for dy/dt = f(y).
template <class Deriv>
std::vector<Complex> rk4_step(Deriv&& f, const std::vector<Complex>& y, double dt) {
  const size_t n = y.size();
  std::vector<Complex> k1 = f(y);
  std::vector<Complex> tmp(n);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
  std::vector<Complex> k2 = f(tmp);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
  std::vector<Complex> k3 = f(tmp);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
  std::vector<Complex> k4 = f(tmp);
  std::vector<Complex> out(n);
  for (size_t i = 0; i < n; ++i) {
    out[i] = y[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace yfluor
