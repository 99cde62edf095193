#pragma once

namespace kgstep {

/// Plain 3-vector; no geometry-library semantics.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Point charge q at (0, 0, d) above the grounded plane z = 0.
struct ImageProblem {
  double charge = 1.0;
  double height = 1.0;  // d > 0
};

struct GreenEval {
  double fundamental = 0.0;          // F = -1/(4 pi |x - x'|)
  double harmonic_correction = 0.0;  // h = +1/(4 pi |x - mirror(x')|)
  double green = 0.0;                // G = F + h, vanishes on z = 0
};

/// Free-space fundamental solution of the 3-D Laplacian, -1/(4 pi r).
double fundamental_solution_3d(const Point3& x, const Point3& source);

/// Dirichlet Green function of the upper half-space built from the mirrored
/// source. x may lie on the plane (boundary limit), the source must not.
GreenEval green_halfspace(const Point3& x, const Point3& source);

/// Potential of the charge plus its image, (q/4pi)(1/r - 1/r_mirror); the
/// relative minus sign is forced by the grounded-plane condition V = 0 at z = 0.
double potential_charge_above_plane(const ImageProblem& problem, const Point3& x);

/// max |V| over a grid_points x grid_points grid on the plane z = 0 spanning
/// [-grid_extent, grid_extent]^2; rounding-level by construction.
double boundary_residual(const ImageProblem& problem, double grid_extent,
                         int grid_points);

}  // namespace kgstep
