#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "kgstep/core.hpp"

namespace kgstep {

struct LatticeConfig {
  double domain_half_width = 100.0;  // grid spans [-L, L], step at x = 0
  int num_points = 2001;             // N >= 3
  double time_step_factor = 0.25;    // in (0, 0.5]
  double total_time = 100.0;
};

/// Positive-energy Gaussian packet launched towards the step from the left.
struct PacketSpec {
  double carrier_energy = 2.0;  // E > m
  double center = -50.0;        // x0, with x0 + 4 sigma < 0
  double width = 10.0;          // spatial standard deviation sigma >= 5 dx
  enum class Direction { RightMoving };
  Direction direction = Direction::RightMoving;
};

/// Complex scalar field at two consecutive time levels plus grid metadata.
struct FieldState {
  std::vector<double> grid;
  std::vector<std::complex<double>> phi_current;
  std::vector<std::complex<double>> phi_previous;
  double time = 0.0;
  std::vector<double> potential_profile;  // V(x_i) = V for x_i >= 0
  double dx = 0.0;
  double dt = 0.0;
  double time_step_factor = 0.25;
};

struct NumericCoefficients {
  double R_num = 0.0;         // charge left of the step at the end of the run
  double T_num = 0.0;         // charge right of the step
  double charge_drift = 0.0;  // max_t |Q_total(t) - 1|
  double boundary_leak = 0.0; // max boundary |phi| relative to the field peak
  double stop_time = 0.0;
};

FieldState build_lattice(const LatticeConfig& config, const PhysicalSetup& setup);

/// Fills both time levels with a normalized packet (total discrete charge +1)
/// and fixes dt from the configured factor, dx and max(V, m, E).
void init_packet(FieldState& state, const PacketSpec& packet, const PhysicalSetup& setup);

/// Advances one time step of (d_t + iV(x))^2 phi = d_x^2 phi - m^2 phi with
/// fixed zero boundary values. Throws NumericalBlowup on non-finite values.
void step(FieldState& state, const PhysicalSetup& setup);

/// Minimal-coupling charge density realized on the two stored time levels.
std::vector<double> charge_density(const FieldState& state, const PhysicalSetup& setup);

/// Trapezoidal charge split at the step: (Q over x < 0, Q over x >= 0).
std::pair<double, double> partition_charge(const FieldState& state,
                                           const PhysicalSetup& setup);

using StepObserver = std::function<void(const FieldState& state, long step_index)>;

/// Full experiment: build, init, evolve until the scattered packets have
/// cleared the step by 6 sigma on each side (or total_time elapses, which
/// raises PacketNeverSeparated), then report the charge split.
NumericCoefficients run_scattering_experiment(const LatticeConfig& config,
                                              const PhysicalSetup& setup,
                                              const PacketSpec& packet,
                                              const StepObserver& observer = {});

/// Plain-text snapshot: one header line (time stamp and run parameters),
/// then one row per grid point with columns x, Re(phi), Im(phi), rho, V(x).
void write_snapshot(const FieldState& state, const PhysicalSetup& setup,
                    std::ostream& os);

}  // namespace kgstep
