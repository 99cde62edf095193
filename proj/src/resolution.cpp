#include "kgstep/resolution.hpp"

#include <sstream>

#include "kgstep/errors.hpp"

namespace kgstep {

namespace {

void require_klein_zone(const PhysicalSetup& setup, const BeamEnergy& beam) {
  const Regime regime = classify_regime(setup, beam);
  if (regime != Regime::KleinZone) {
    std::ostringstream msg;
    msg << "global coefficients are defined in the Klein zone only, got "
        << to_string(regime);
    throw UnsupportedRegime(msg.str());
  }
}

}  // namespace

GlobalCoefficients resolve(const PhysicalSetup& setup, const BeamEnergy& beam) {
  require_klein_zone(setup, beam);
  const CoeffPair u = reflection_transmission(solve_left_incident(setup, beam));
  const CoeffPair w = reflection_transmission(solve_right_incident(setup, beam));
  GlobalCoefficients out;
  out.R_u = u.R;
  out.T_u = u.T;
  out.R_w = w.R;
  out.T_w = w.T;
  out.R_G = u.R + w.T;
  out.T_G = u.T + w.R;
  return out;
}

std::pair<double, double> fake_conservation_check(const PhysicalSetup& setup,
                                                  const BeamEnergy& beam) {
  require_klein_zone(setup, beam);
  const CoeffPair u = reflection_transmission(solve_left_incident(setup, beam));
  const CoeffPair w = reflection_transmission(solve_right_incident(setup, beam));
  return {u.R + u.T, w.R + w.T};
}

StationaryField superpose(const std::optional<ScatteringSolution>& left,
                          const std::optional<ScatteringSolution>& right,
                          std::span<const double> sample_points) {
  if (left && left->direction != Direction::LeftIncident)
    throw InconsistentSolutions("first argument must be a left-incident solution");
  if (right && right->direction != Direction::RightIncident)
    throw InconsistentSolutions("second argument must be a right-incident solution");
  if ((left && left->regime != Regime::KleinZone) ||
      (right && right->regime != Regime::KleinZone))
    throw UnsupportedRegime("superposition is defined in the Klein zone only");
  if (left && right) {
    if (left->setup.mass != right->setup.mass ||
        left->setup.barrier_height != right->setup.barrier_height ||
        left->energy != right->energy)
      throw InconsistentSolutions("solutions do not share setup and energy");
  }

  StationaryField field;
  field.sample_points.assign(sample_points.begin(), sample_points.end());
  field.values.reserve(sample_points.size());
  field.u_component.reserve(sample_points.size());
  field.w_component.reserve(sample_points.size());
  for (double x : sample_points) {
    const std::complex<double> u = left ? evaluate(*left, x) : 0.0;
    const std::complex<double> w = right ? evaluate(*right, x) : 0.0;
    field.u_component.push_back(u);
    field.w_component.push_back(w);
    field.values.push_back(u + w);
  }
  return field;
}

}  // namespace kgstep
