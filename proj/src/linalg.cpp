#include "yfluor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace yfluor {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double ComplexMatrix::inf_norm() const {
  double best = 0.0;
  for (int r = 0; r < rows_; ++r) {
    double sum = 0.0;
    for (int c = 0; c < cols_; ++c) sum += std::abs((*this)(r, c));
    best = std::max(best, sum);
  }
  return best;
}

std::vector<Complex> operator*(const ComplexMatrix& A, const std::vector<Complex>& x) {
  std::vector<Complex> y(A.rows());
  for (int r = 0; r < A.rows(); ++r) {
    Complex acc = 0.0;
    for (int c = 0; c < A.cols(); ++c) acc += A(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

ComplexMatrix operator*(const ComplexMatrix& A, const ComplexMatrix& B) {
  ComplexMatrix C(A.rows(), B.cols());
  for (int r = 0; r < A.rows(); ++r) {
    for (int k = 0; k < A.cols(); ++k) {
      const Complex a = A(r, k);
      if (a == Complex(0.0)) continue;
      for (int c = 0; c < B.cols(); ++c) C(r, c) += a * B(k, c);
    }
  }
  return C;
}

LuFactor::LuFactor(const ComplexMatrix& A) : n_(A.rows()), lu_(A), perm_(n_) {
  const double pivot_floor = 1e-14 * A.inf_norm();
  std::iota(perm_.begin(), perm_.end(), 0);
  for (int k = 0; k < n_; ++k) {
    int best = k;
    double best_mag = std::abs(lu_(k, k));
    for (int r = k + 1; r < n_; ++r) {
      const double mag = std::abs(lu_(r, k));
      if (mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best_mag < pivot_floor || best_mag == 0.0) {
      throw SingularMatrix("singular matrix in LU factorization (pivot " +
                           std::to_string(best_mag) + " at step " +
                           std::to_string(k + 1) + ")");
    }
    if (best != k) {
      for (int c = 0; c < n_; ++c) std::swap(lu_(k, c), lu_(best, c));
      std::swap(perm_[k], perm_[best]);
    }
    const Complex inv_pivot = 1.0 / lu_(k, k);
    for (int r = k + 1; r < n_; ++r) {
      const Complex factor = lu_(r, k) * inv_pivot;
      lu_(r, k) = factor;
      if (factor == Complex(0.0)) continue;
      for (int c = k + 1; c < n_; ++c) lu_(r, c) -= factor * lu_(k, c);
    }
  }
}

std::vector<Complex> LuFactor::solve(std::span<const Complex> b) const {
  std::vector<Complex> x(n_);
  for (int r = 0; r < n_; ++r) x[r] = b[perm_[r]];
  // forward substitution (unit lower triangle)
  for (int r = 1; r < n_; ++r) {
    Complex acc = x[r];
    for (int c = 0; c < r; ++c) acc -= lu_(r, c) * x[c];
    x[r] = acc;
  }
  // back substitution
  for (int r = n_ - 1; r >= 0; --r) {
    Complex acc = x[r];
    for (int c = r + 1; c < n_; ++c) acc -= lu_(r, c) * x[c];
    x[r] = acc / lu_(r, r);
  }
  return x;
}

ComplexMatrix LuFactor::solve(const ComplexMatrix& B) const {
  ComplexMatrix X(n_, B.cols());
  std::vector<Complex> col(n_);
  for (int c = 0; c < B.cols(); ++c) {
    for (int r = 0; r < n_; ++r) col[r] = B(r, c);
    const std::vector<Complex> x = solve(col);
    for (int r = 0; r < n_; ++r) X(r, c) = x[r];
  }
  return X;
}

std::vector<Complex> lu_solve(const ComplexMatrix& A, std::span<const Complex> b) {
  return LuFactor(A).solve(b);
}

ComplexMatrix inverse(const ComplexMatrix& A) {
  return LuFactor(A).solve(ComplexMatrix::identity(A.rows()));
}

SymmetricEigen eig_symmetric(std::span<const double> h, int n) {
  double scale = 0.0;
  for (int r = 0; r < n; ++r) {
    double sum = 0.0;
    for (int c = 0; c < n; ++c) sum += std::abs(h[r * n + c]);
    scale = std::max(scale, sum);
  }
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      if (std::abs(h[r * n + c] - h[c * n + r]) > 1e-12 * std::max(scale, 1.0)) {
        throw NotSymmetric("matrix is not symmetric at (" + std::to_string(r + 1) +
                           "," + std::to_string(c + 1) + ")");
      }
    }
  }

  std::vector<double> a(h.begin(), h.end());
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  // cyclic Jacobi sweeps
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (std::sqrt(off) <= 1e-15 * std::max(scale, 1.0)) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = 0.5 * std::atan2(2.0 * apq, a[q * n + q] - a[p * n + p]);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    out.values[k] = a[src * n + src];
    for (int i = 0; i < n; ++i) out.vectors[k * n + i] = v[i * n + src];
  }
  return out;
}

}  // namespace yfluor
