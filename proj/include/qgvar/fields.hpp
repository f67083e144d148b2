/*
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QGVAR_FIELDS_HPP_
#define QGVAR_FIELDS_HPP_

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "qgvar/rng.hpp"

namespace qgvar {

using Eigen::ArrayXXd;
using Eigen::VectorXd;

/// Two-layer gridded field, layer(0) = top, layer(1) = bottom.
/// Row index j is the y (cross-channel) direction, column index i is the
/// periodic x direction, so layer[l](j, i) addresses grid point (j, i).
struct Fields {
  std::array<ArrayXXd, 2> layer;

  Fields() = default;
  Fields(int ny, int nx) { set_zero(ny, nx); }

  void set_zero(int ny, int nx) {
    layer[0] = ArrayXXd::Zero(ny, nx);
    layer[1] = ArrayXXd::Zero(ny, nx);
  }

  int ny() const { return static_cast<int>(layer[0].rows()); }
  int nx() const { return static_cast<int>(layer[0].cols()); }
  int size() const { return 2 * ny() * nx(); }
  bool empty() const { return layer[0].size() == 0; }

  bool same_shape(const Fields& other) const {
    return ny() == other.ny() && nx() == other.nx();
  }

  bool all_finite() const {
    return layer[0].isFinite().all() && layer[1].isFinite().all();
  }

  Fields& operator+=(const Fields& o) {
    layer[0] += o.layer[0];
    layer[1] += o.layer[1];
    return *this;
  }
  Fields& operator-=(const Fields& o) {
    layer[0] -= o.layer[0];
    layer[1] -= o.layer[1];
    return *this;
  }
  Fields& operator*=(double a) {
    layer[0] *= a;
    layer[1] *= a;
    return *this;
  }

  friend Fields operator+(Fields a, const Fields& b) { return a += b; }
  friend Fields operator-(Fields a, const Fields& b) { return a -= b; }
  friend Fields operator*(double a, Fields f) { return f *= a; }

  double dot(const Fields& o) const {
    return (layer[0] * o.layer[0]).sum() + (layer[1] * o.layer[1]).sum();
  }
  double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }
  double max_abs() const {
    return std::max(layer[0].abs().maxCoeff(), layer[1].abs().maxCoeff());
  }

  /// Layer-major, row-major flattening: index = l*ny*nx + j*nx + i.
  VectorXd flatten() const {
    const int rows = ny(), cols = nx();
    VectorXd v(2 * rows * cols);
    int idx = 0;
    for (int l = 0; l < 2; ++l)
      for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) v[idx++] = layer[l](j, i);
    return v;
  }

  static Fields unflatten(const VectorXd& v, int ny, int nx) {
    Fields f(ny, nx);
    int idx = 0;
    for (int l = 0; l < 2; ++l)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) f.layer[l](j, i) = v[idx++];
    return f;
  }

  static Fields random_normal(int ny, int nx, Rng& rng, double stddev = 1.0) {
    Fields f(ny, nx);
    for (int l = 0; l < 2; ++l)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) f.layer[l](j, i) = stddev * rng.normal();
    return f;
  }
};

/// Root-mean-square difference over all 2*ny*nx values.
inline double rmse(const Fields& a, const Fields& b) {
  const double n = static_cast<double>(a.size());
  return std::sqrt((a - b).squared_norm() / n);
}

}  // namespace qgvar

#endif  // QGVAR_FIELDS_HPP_
