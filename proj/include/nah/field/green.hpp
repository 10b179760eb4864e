#pragma once

#include <Eigen/Dense>
#include <complex>

#include "nah/field/constants.hpp"
#include "nah/field/grid.hpp"

namespace nah::field {

using Complex = std::complex<double>;

// Free-field Green's function between a source point s and a field point r:
// exp(-j*(omega/c)*d) / (4*pi*d), d = |r - s|.
Complex green(const Vec3& r, const Vec3& s, double omega, const PhysicalConstants& consts);

// Derivative of green() along the unit direction n taken at the source
// point: -g * (j*omega/c + 1/d) * dot(s - r, n) / d.
Complex green_normal_derivative(const Vec3& r, const Vec3& s, const Vec3& n, double omega,
                                const PhysicalConstants& consts);

// Monopole and dipole propagation matrices between a source grid (N points)
// and a hologram grid (M points):
//   g_v(n, m) = green(r_m, s_n)
//   g_p(n, m) = green_normal_derivative(r_m, s_n, source normal)
struct GreenOperator {
  Eigen::MatrixXcd g_v;  // N x M
  Eigen::MatrixXcd g_p;  // N x M
  double omega = 0.0;    // rad/s
};

GreenOperator build_green_operator(const Grid2D& source_grid, const Grid2D& holo_grid,
                                   double omega, const PhysicalConstants& consts);

// Discretized Kirchhoff-Helmholtz propagation to the hologram:
//   p_H = area_weight * (g_p^T * p_S - j*omega*rho0 * g_v^T * v).
// The transpose is unconjugated; entries propagate with the outgoing kernel.
Eigen::VectorXcd forward_kh(const GreenOperator& op, const Eigen::VectorXcd& surface_pressure,
                            const Eigen::VectorXcd& velocity, double area_weight,
                            const PhysicalConstants& consts);

// Rayleigh first integral for a flat source in an infinite baffle
// (velocity term only, image-source factor 2):
//   p_H = -2*j*omega*rho0 * area_weight * g_v^T * v.
Eigen::VectorXcd forward_rayleigh(const GreenOperator& op, const Eigen::VectorXcd& velocity,
                                  double area_weight, const PhysicalConstants& consts);

}  // namespace nah::field
