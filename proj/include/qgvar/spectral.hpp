/*
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QGVAR_SPECTRAL_HPP_
#define QGVAR_SPECTRAL_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace qgvar {

/// Orthonormal real Fourier basis on n periodic points. The columns
/// simultaneously diagonalize every symmetric circulant operator, in
/// particular the periodic second difference used by the PV inversion and
/// the periodic correlation operators.
struct CirculantBasis {
  Eigen::MatrixXd basis;        // n x n, orthogonal
  Eigen::VectorXi frequency;    // integer frequency of each column
  Eigen::VectorXd laplacian_eigenvalues;  // of (f[i-1]-2f[i]+f[i+1])/dx^2

  static CirculantBasis make(int n, double dx) {
    CirculantBasis out;
    out.basis.resize(n, n);
    out.frequency.resize(n);
    out.laplacian_eigenvalues.resize(n);
    int c = 0;
    auto push = [&](int m, bool sine) {
      for (int j = 0; j < n; ++j) {
        const double arg = 2.0 * M_PI * m * j / n;
        double v;
        if (m == 0) {
          v = 1.0 / std::sqrt(static_cast<double>(n));
        } else if (2 * m == n) {
          v = (j % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n));
        } else {
          v = std::sqrt(2.0 / n) * (sine ? std::sin(arg) : std::cos(arg));
        }
        out.basis(j, c) = v;
      }
      out.frequency[c] = m;
      out.laplacian_eigenvalues[c] =
          -(2.0 - 2.0 * std::cos(2.0 * M_PI * m / n)) / (dx * dx);
      ++c;
    };
    push(0, false);
    for (int m = 1; 2 * m < n; ++m) {
      push(m, false);
      push(m, true);
    }
    if (n % 2 == 0) push(n / 2, false);
    return out;
  }

  /// Eigenvalues of the symmetric circulant whose first row is
  /// kernel(d) = k(min(d, n-d)), matched to the basis column order.
  Eigen::VectorXd circulant_eigenvalues(const Eigen::VectorXd& kernel) const {
    const int n = static_cast<int>(basis.rows());
    Eigen::VectorXd eigs(n);
    for (int col = 0; col < n; ++col) {
      const int m = frequency[col];
      double sum = 0.0;
      for (int d = 0; d < n; ++d)
        sum += kernel[d] * std::cos(2.0 * M_PI * m * d / n);
      eigs[col] = sum;
    }
    return eigs;
  }
};

}  // namespace qgvar

#endif  // QGVAR_SPECTRAL_HPP_
