#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "nah/util/errors.hpp"

namespace nah::field {

using Vec3 = Eigen::Vector3d;

// Planar rectangular grid of points, enumerated row-major:
// point(i, j) = origin + i*u_step*axis_u + j*v_step*axis_v,
// i in [0, n_u), j in [0, n_v).
struct Grid2D {
  Vec3 origin{0, 0, 0};
  Vec3 axis_u{0, 1, 0};
  Vec3 axis_v{1, 0, 0};
  double u_step = 0.0;
  double v_step = 0.0;
  int n_u = 0;
  int n_v = 0;
  Vec3 normal{0, 0, 1};

  int count() const { return n_u * n_v; }
  int index(int i, int j) const { return i * n_v + j; }

  Vec3 point(int i, int j) const {
    return origin + static_cast<double>(i) * u_step * axis_u +
           static_cast<double>(j) * v_step * axis_v;
  }
  Vec3 point(int flat) const { return point(flat / n_v, flat % n_v); }

  void validate() const {
    if (n_u < 1 || n_v < 1) throw ValidationError("Grid2D: counts must be >= 1");
    if (!(u_step > 0.0) || !(v_step > 0.0)) throw ValidationError("Grid2D: steps must be > 0");
    if (std::abs(axis_u.norm() - 1.0) > 1e-12 || std::abs(axis_v.norm() - 1.0) > 1e-12 ||
        std::abs(normal.norm() - 1.0) > 1e-12)
      throw ValidationError("Grid2D: axes and normal must be unit vectors");
  }
};

}  // namespace nah::field
