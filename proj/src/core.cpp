#include "kgstep/core.hpp"

#include <cmath>
#include <sstream>

#include "kgstep/errors.hpp"

namespace kgstep {

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::NoIncident: return "NoIncident";
    case Regime::KleinZone: return "KleinZone";
    case Regime::Evanescent: return "Evanescent";
    case Regime::Transmitting: return "Transmitting";
    case Regime::DegenerateBoundary: return "DegenerateBoundary";
  }
  return "unknown";
}

void validate(const PhysicalSetup& setup) {
  if (!std::isfinite(setup.mass) || !std::isfinite(setup.barrier_height))
    throw InvalidInput("setup parameters must be finite");
  if (setup.mass <= 0.0) throw InvalidInput("mass must be > 0");
  if (setup.barrier_height < 0.0) throw InvalidInput("barrier height must be >= 0");
}

void validate(const BeamEnergy& beam) {
  if (!std::isfinite(beam.energy)) throw InvalidInput("beam energy must be finite");
}

Regime classify_regime(const PhysicalSetup& setup, const BeamEnergy& beam) {
  validate(setup);
  validate(beam);
  const double m = setup.mass;
  const double E = beam.energy;
  const double d = setup.barrier_height - E;
  if (E < m) return Regime::NoIncident;
  // k1 = k2 is equivalent to E^2 = (V-E)^2.
  if (E == m || std::abs(d) == m || E * E == d * d) return Regime::DegenerateBoundary;
  if (d > m) return Regime::KleinZone;
  if (std::abs(d) < m) return Regime::Evanescent;
  return Regime::Transmitting;
}

MomentumPair effective_momenta(const PhysicalSetup& setup, const BeamEnergy& beam) {
  if (classify_regime(setup, beam) == Regime::NoIncident) {
    std::ostringstream msg;
    msg << "E <= m: no propagating incident beam (E=" << beam.energy
        << ", m=" << setup.mass << ")";
    throw NoPropagatingBeam(msg.str());
  }
  const double m = setup.mass;
  const double E = beam.energy;
  const double d = setup.barrier_height - E;
  MomentumPair out;
  out.k1 = std::sqrt(E * E - m * m);
  const double q = d * d - m * m;
  out.k2 = q >= 0.0 ? std::complex<double>(std::sqrt(q), 0.0)
                    : std::complex<double>(0.0, std::sqrt(-q));
  return out;
}

std::pair<double, double> onshell_residuals(const PhysicalSetup& setup,
                                            const BeamEnergy& beam,
                                            const MomentumPair& momenta) {
  const double m = setup.mass;
  const double E = beam.energy;
  const double d = setup.barrier_height - E;
  const double r1 = m * m - E * E + momenta.k1 * momenta.k1;
  const double r2 = m * m - d * d + (momenta.k2 * momenta.k2).real();
  return {r1, r2};
}

}  // namespace kgstep
