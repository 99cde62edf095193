#pragma once

#include <complex>
#include <utility>

#include "kgstep/core.hpp"

namespace kgstep {

enum class Direction { LeftIncident, RightIncident };

/// Stationary matching solution for a unit-amplitude incident beam.
/// Left-incident:  u_I  = e^{i k1 x} + A e^{-i k1 x}  (x < 0),
///                 u_II = B e^{s i k2 x}              (x >= 0),
/// where s = -1 in the Klein zone (charge-current branch) and s = +1
/// otherwise (outgoing above the barrier, decaying e^{-kappa x} in between).
/// Right-incident (Klein zone only):
///                 w_I  = e^{i k2 x} + C e^{-i k2 x}  (x >= 0),
///                 w_II = D e^{-i k1 x}               (x < 0).
struct ScatteringSolution {
  PhysicalSetup setup;
  double energy = 0.0;
  MomentumPair momenta;
  Direction direction = Direction::LeftIncident;
  std::complex<double> reflected_amp{0.0, 0.0};    // A or C
  std::complex<double> transmitted_amp{0.0, 0.0};  // B or D
  Regime regime = Regime::NoIncident;
};

/// Currents carried by the incident, reflected and transmitted components,
/// in units of momentum/mass.
struct CurrentTriple {
  double incident = 0.0;
  double reflected = 0.0;
  double transmitted = 0.0;
};

struct CoeffPair {
  double R = 0.0;  // reflection coefficient |j_r / j_i|
  double T = 0.0;  // transmission coefficient j_t / j_i
};

ScatteringSolution solve_left_incident(const PhysicalSetup& setup, const BeamEnergy& beam);
ScatteringSolution solve_right_incident(const PhysicalSetup& setup, const BeamEnergy& beam);

CurrentTriple beam_currents(const ScatteringSolution& sol);
CoeffPair reflection_transmission(const ScatteringSolution& sol);

/// |u(0-) - u(0+)| and |u'(0-) - u'(0+)| reconstructed from the stored
/// amplitudes; vanishes (to rounding) for solver output.
std::pair<double, double> matching_residual(const ScatteringSolution& sol);

/// Minimal-coupling charge density of one plane-wave component:
/// |amplitude|^2 (E - V_local) / m.
double plane_wave_density(double mass, double energy, double local_potential,
                          std::complex<double> amplitude);

/// Piecewise stationary wave and its x-derivative.
std::complex<double> evaluate(const ScatteringSolution& sol, double x);
std::complex<double> evaluate_derivative(const ScatteringSolution& sol, double x);

/// Independent route to the amplitudes: assembles the 2x2 continuity system
/// at x = 0 and solves it numerically by elimination. The solvers use the
/// closed forms instead; this path is kept public as an oracle so that the
/// two routes can be checked against each other.
std::pair<std::complex<double>, std::complex<double>> matching_system_solution(
    const PhysicalSetup& setup, const BeamEnergy& beam, Direction direction);

}  // namespace kgstep
