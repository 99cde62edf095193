#include "kgstep/images.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kgstep/errors.hpp"

namespace kgstep {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Point3 mirrored(const Point3& p) { return {p.x, p.y, -p.z}; }

void validate(const ImageProblem& problem) {
  if (!std::isfinite(problem.charge) || !std::isfinite(problem.height))
    throw InvalidInput("charge and height must be finite");
  if (problem.height <= 0.0) throw InvalidInput("height must be > 0");
}

}  // namespace

double fundamental_solution_3d(const Point3& x, const Point3& source) {
  const double r = distance(x, source);
  if (r == 0.0) throw SingularPoint("evaluation point coincides with the source");
  return -1.0 / (kFourPi * r);
}

GreenEval green_halfspace(const Point3& x, const Point3& source) {
  if (x.z < 0.0) throw OutOfDomain("evaluation point must have z >= 0");
  if (source.z <= 0.0) throw OutOfDomain("source must lie strictly in z > 0");
  GreenEval out;
  out.fundamental = fundamental_solution_3d(x, source);
  out.harmonic_correction = -fundamental_solution_3d(x, mirrored(source));
  out.green = out.fundamental + out.harmonic_correction;
  return out;
}

double potential_charge_above_plane(const ImageProblem& problem, const Point3& x) {
  validate(problem);
  if (x.z < 0.0) throw OutOfDomain("evaluation point must have z >= 0");
  const Point3 charge_pos{0.0, 0.0, problem.height};
  const double r = distance(x, charge_pos);
  if (r == 0.0) throw SingularPoint("evaluation point coincides with the charge");
  const double r_mirror = distance(x, mirrored(charge_pos));
  return problem.charge / kFourPi * (1.0 / r - 1.0 / r_mirror);
}

double boundary_residual(const ImageProblem& problem, double grid_extent,
                         int grid_points) {
  validate(problem);
  if (!(grid_extent > 0.0)) throw InvalidInput("grid extent must be > 0");
  if (grid_points < 1) throw InvalidInput("grid point count must be >= 1");
  const double step =
      grid_points > 1 ? 2.0 * grid_extent / (grid_points - 1) : 0.0;
  double residual = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double px = -grid_extent + step * i;
    for (int j = 0; j < grid_points; ++j) {
      const double py = -grid_extent + step * j;
      residual = std::max(
          residual, std::abs(potential_charge_above_plane(problem, {px, py, 0.0})));
    }
  }
  return residual;
}

}  // namespace kgstep
