#pragma once

#include <complex>
#include <utility>

// Natural units throughout: hbar = c = 1, unit positive charge.

namespace kgstep {

/// Step-potential scattering problem: V(x) = barrier_height for x >= 0, else 0.
struct PhysicalSetup {
  double mass = 1.0;            // m > 0
  double barrier_height = 0.0;  // V >= 0
};

/// Total relativistic energy of the incident beam.
struct BeamEnergy {
  double energy = 0.0;
};

enum class Regime {
  NoIncident,          // E < m, no propagating incident beam
  KleinZone,           // m < E < V - m, propagating region-II mode below the barrier top
  Evanescent,          // |V - E| < m, region-II solution decays exponentially
  Transmitting,        // E > V + m, ordinary transmission
  DegenerateBoundary,  // E = m, |V - E| = m, or k1 = k2 exactly
};

const char* to_string(Regime regime);

/// Effective momenta: k1 = sqrt(E^2 - m^2) in region I, and in region II
/// k2 = sqrt((V-E)^2 - m^2) when real, else +i sqrt(m^2 - (V-E)^2) (decaying branch).
struct MomentumPair {
  double k1 = 0.0;
  std::complex<double> k2{0.0, 0.0};
};

void validate(const PhysicalSetup& setup);
void validate(const BeamEnergy& beam);

/// Total classification of the (m, V, E) parameter space. Boundary equalities
/// are detected with exact comparisons on their defining expressions, never
/// with epsilon bands.
Regime classify_regime(const PhysicalSetup& setup, const BeamEnergy& beam);

MomentumPair effective_momenta(const PhysicalSetup& setup, const BeamEnergy& beam);

/// Klein-Gordon operator residuals of the stationary plane waves:
/// r1 = m^2 - E^2 + k1^2 and r2 = m^2 - (V-E)^2 + k2^2 (complex square).
/// Both vanish on-shell.
std::pair<double, double> onshell_residuals(const PhysicalSetup& setup,
                                            const BeamEnergy& beam,
                                            const MomentumPair& momenta);

}  // namespace kgstep
