#include "gravab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>

#include "gravab/error.hpp"

namespace gravab {

void InterferometerGeometry::validate() const {
  auto finite = [](const Vec3& v) { return v.allFinite(); };
  if (!finite(upper_arm) || !finite(lower_arm) || !finite(source)) {
    throw Error(ErrorKind::invalid_geometry, "positions must be finite");
  }
  if ((upper_arm - source).norm() <= 0.0) {
    throw Error(ErrorKind::invalid_geometry, "upper arm coincides with the source mass");
  }
  if ((lower_arm - source).norm() <= 0.0) {
    throw Error(ErrorKind::invalid_geometry, "lower arm coincides with the source mass");
  }
  if (!(atom_mass > 0.0) || !std::isfinite(atom_mass)) {
    throw Error(ErrorKind::invalid_geometry, "atom mass must be positive");
  }
  if (!(source_mass > 0.0) || !std::isfinite(source_mass)) {
    throw Error(ErrorKind::invalid_geometry, "source mass must be positive");
  }
  if (!(interaction_time >= 0.0) || !std::isfinite(interaction_time)) {
    throw Error(ErrorKind::invalid_geometry, "interaction time must be >= 0");
  }
}

InterferometerGeometry InterferometerGeometry::swapped_arms() const {
  InterferometerGeometry g = *this;
  std::swap(g.upper_arm, g.lower_arm);
  return g;
}

ArmDistances arm_distances(const InterferometerGeometry& geom) {
  ArmDistances d{(geom.upper_arm - geom.source).norm(), (geom.lower_arm - geom.source).norm()};
  if (d.upper <= 0.0 || d.lower <= 0.0) {
    throw Error(ErrorKind::invalid_geometry, "arm position coincides with the source mass");
  }
  return d;
}

double arm_separation(const InterferometerGeometry& geom) {
  return (geom.upper_arm - geom.lower_arm).norm();
}

const char* to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::full_interaction: return "full-interaction";
    case ScenarioKind::one_arm: return "one-arm";
    case ScenarioKind::no_arm: return "no-arm";
  }
  return "unknown";
}

ScenarioKind scenario_kind_from_string(const char* name) {
  const std::string_view s{name};
  if (s == "full-interaction") return ScenarioKind::full_interaction;
  if (s == "one-arm") return ScenarioKind::one_arm;
  if (s == "no-arm") return ScenarioKind::no_arm;
  throw Error(ErrorKind::config, "unknown scenario kind '" + std::string{s} +
                                     "' (expected full-interaction, one-arm or no-arm)");
}

GatingReport light_cone_contact(const InterferometerGeometry& geom, double loop_closure_time,
                                const PhysicalConstants& constants) {
  if (!(loop_closure_time >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "loop closure time must be >= 0");
  }
  const ArmDistances d = arm_distances(geom);
  GatingReport r;
  r.light_travel_upper = d.upper / constants.c;
  r.light_travel_lower = d.lower / constants.c;
  r.upper_in_contact = r.light_travel_upper <= loop_closure_time;
  r.lower_in_contact = r.light_travel_lower <= loop_closure_time;
  return r;
}

GatingReport causal_gating(const InterferometerGeometry& geom, const ScenarioConfig& scenario,
                           const PhysicalConstants& constants) {
  GatingReport r = light_cone_contact(geom, scenario.loop_closure_time, constants);
  std::ostringstream msg;
  msg.precision(17);
  switch (scenario.kind) {
    case ScenarioKind::full_interaction:
      r.upper_in_contact = true;
      r.lower_in_contact = true;
      break;
    case ScenarioKind::one_arm:
      if (r.upper_in_contact == r.lower_in_contact) {
        const double near = std::min(r.light_travel_upper, r.light_travel_lower);
        const double far = std::max(r.light_travel_upper, r.light_travel_lower);
        msg << "one-arm scenario requires min(light_travel) <= loop_closure_time < "
               "max(light_travel), got min(light_travel) = "
            << near << " s, loop_closure_time = " << scenario.loop_closure_time
            << " s, max(light_travel) = " << far << " s";
        throw Error(ErrorKind::inconsistent_scenario, msg.str());
      }
      break;
    case ScenarioKind::no_arm:
      if (r.upper_in_contact || r.lower_in_contact) {
        msg << "no-arm scenario requires loop_closure_time < min(light_travel), got "
               "loop_closure_time = "
            << scenario.loop_closure_time
            << " s, min(light_travel) = " << std::min(r.light_travel_upper, r.light_travel_lower)
            << " s";
        throw Error(ErrorKind::inconsistent_scenario, msg.str());
      }
      break;
  }
  return r;
}

ArmWeights arm_weights(const GatingReport& gating) {
  return ArmWeights{gating.upper_in_contact ? 1.0 : 0.0, gating.lower_in_contact ? 1.0 : 0.0};
}

}  // namespace gravab
