#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "gravab/constants.hpp"

namespace gravab {

using Vec3 = Eigen::Vector3d;

enum class Arm { upper, lower };

// Static two-arm interferometer next to a point source mass.
//
// Arms are treated as fixed points for the whole interaction time.
struct InterferometerGeometry {
  Vec3 upper_arm{0.0, 0.0, 0.0};
  Vec3 lower_arm{0.0, 0.0, 0.0};
  Vec3 source{0.0, 0.0, 0.0};
  double atom_mass = 0.0;         // kg
  double source_mass = 0.0;       // kg
  double interaction_time = 0.0;  // s

  // Throws Error(invalid_geometry) if an arm coincides with the source, a
  // mass is not strictly positive, or the time is negative or not finite.
  void validate() const;

  const Vec3& arm(Arm which) const { return which == Arm::upper ? upper_arm : lower_arm; }

  // Same geometry with the arm labels exchanged.
  InterferometerGeometry swapped_arms() const;
};

struct ArmDistances {
  double upper;  // |r_u - r_s|
  double lower;  // |r_d - r_s|
};

ArmDistances arm_distances(const InterferometerGeometry& geom);

// |r_u - r_d|
double arm_separation(const InterferometerGeometry& geom);

enum class ScenarioKind { full_interaction, one_arm, no_arm };

const char* to_string(ScenarioKind kind) noexcept;
ScenarioKind scenario_kind_from_string(const char* name);

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::full_interaction;
  double loop_closure_time = 0.0;  // s
};

struct GatingReport {
  bool upper_in_contact = false;
  bool lower_in_contact = false;
  double light_travel_upper = 0.0;  // s
  double light_travel_lower = 0.0;  // s
};

// Raw light-cone test: an arm is in contact when a signal from the source
// reaches it before the loop closes, |r - r_s| <= c * t_close.
GatingReport light_cone_contact(const InterferometerGeometry& geom, double loop_closure_time,
                                const PhysicalConstants& constants = codata2018);

// Applies the scenario rules on top of light_cone_contact:
//   full-interaction: both arms forced into contact
//   one-arm:          exactly one arm must be inside the light cone
//   no-arm:           the loop must close before either arm is reached
// Throws Error(inconsistent_scenario) naming the violated inequality.
GatingReport causal_gating(const InterferometerGeometry& geom, const ScenarioConfig& scenario,
                           const PhysicalConstants& constants = codata2018);

// Multipliers applied to the arm couplings; a gated-off arm gets 0.
struct ArmWeights {
  double upper = 1.0;
  double lower = 1.0;
};

ArmWeights arm_weights(const GatingReport& gating);

}  // namespace gravab
