#include "nah/field/green.hpp"

#include <string>

#include "nah/util/parallel.hpp"

namespace nah::field {

namespace {
constexpr Complex kJ{0.0, 1.0};
constexpr double kFourPi = 4.0 * M_PI;
}  // namespace

Complex green(const Vec3& r, const Vec3& s, double omega, const PhysicalConstants& consts) {
  const double d = (r - s).norm();
  if (d <= 0.0) throw SingularEvaluationError("green: coincident field and source points");
  const double k = omega / consts.c;
  return std::exp(-kJ * (k * d)) / (kFourPi * d);
}

Complex green_normal_derivative(const Vec3& r, const Vec3& s, const Vec3& n, double omega,
                                const PhysicalConstants& consts) {
  const Vec3 diff = r - s;
  const double d = diff.norm();
  if (d <= 0.0)
    throw SingularEvaluationError("green_normal_derivative: coincident field and source points");
  const double k = omega / consts.c;
  const Complex g = std::exp(-kJ * (k * d)) / (kFourPi * d);
  const double proj = (s - r).dot(n) / d;
  return -g * (kJ * k + 1.0 / d) * proj;
}

GreenOperator build_green_operator(const Grid2D& source_grid, const Grid2D& holo_grid,
                                   double omega, const PhysicalConstants& consts) {
  source_grid.validate();
  holo_grid.validate();
  consts.validate();
  const int n = source_grid.count();
  const int m = holo_grid.count();

  GreenOperator op;
  op.omega = omega;
  op.g_v.resize(n, m);
  op.g_p.resize(n, m);

  const Vec3 src_normal = source_grid.normal;
  util::parallel_for(0, n, [&](int64_t sn) {
    const Vec3 s = source_grid.point(static_cast<int>(sn));
    for (int fm = 0; fm < m; ++fm) {
      const Vec3 r = holo_grid.point(fm);
      const double d = (r - s).norm();
      if (d <= 0.0)
        throw SingularEvaluationError("build_green_operator: coincident points at source n=" +
                                      std::to_string(sn) + ", hologram m=" + std::to_string(fm));
      op.g_v(sn, fm) = green(r, s, omega, consts);
      op.g_p(sn, fm) = green_normal_derivative(r, s, src_normal, omega, consts);
    }
  });
  return op;
}

Eigen::VectorXcd forward_kh(const GreenOperator& op, const Eigen::VectorXcd& surface_pressure,
                            const Eigen::VectorXcd& velocity, double area_weight,
                            const PhysicalConstants& consts) {
  const auto n = op.g_v.rows();
  if (surface_pressure.size() != n || velocity.size() != n)
    throw ValidationError("forward_kh: vector length does not match source count");
  const Complex coupling = kJ * op.omega * consts.rho0;
  return area_weight *
         (op.g_p.transpose() * surface_pressure - coupling * (op.g_v.transpose() * velocity));
}

Eigen::VectorXcd forward_rayleigh(const GreenOperator& op, const Eigen::VectorXcd& velocity,
                                  double area_weight, const PhysicalConstants& consts) {
  if (velocity.size() != op.g_v.rows())
    throw ValidationError("forward_rayleigh: vector length does not match source count");
  const Complex coupling = 2.0 * kJ * op.omega * consts.rho0;
  return -coupling * area_weight * (op.g_v.transpose() * velocity);
}

}  // namespace nah::field
