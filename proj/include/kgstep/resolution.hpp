#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kgstep/planewave.hpp"

namespace kgstep {

/// Coefficients of the real beam (u), the virtual right-incident beam (w),
/// and the paradox-resolving global pair. R_G = R_u + T_w equals 1 in the
/// Klein zone; T_G = T_u + R_w is the symmetric counterpart reported as an
/// extension (the virtual beam itself is not observable).
struct GlobalCoefficients {
  double R_u = 0.0;
  double T_u = 0.0;
  double R_w = 0.0;
  double T_w = 0.0;
  double R_G = 0.0;
  double T_G = 0.0;
};

/// Samples of the superposition u(x) + w(x), with both components retained.
struct StationaryField {
  std::vector<double> sample_points;
  std::vector<std::complex<double>> values;
  std::vector<std::complex<double>> u_component;
  std::vector<std::complex<double>> w_component;
};

/// Klein-zone only: solves both beams and combines their coefficients.
GlobalCoefficients resolve(const PhysicalSetup& setup, const BeamEnergy& beam);

/// Returns (R_u + T_u, R_w + T_w); both equal 1 even though individually
/// R > 1 and T < 0.
std::pair<double, double> fake_conservation_check(const PhysicalSetup& setup,
                                                  const BeamEnergy& beam);

/// Pointwise superposition of a left-incident solution and a virtual
/// right-incident one; either side may be absent (treated as zero).
StationaryField superpose(const std::optional<ScatteringSolution>& left,
                          const std::optional<ScatteringSolution>& right,
                          std::span<const double> sample_points);

}  // namespace kgstep
