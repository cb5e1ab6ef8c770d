#pragma once

#include <json.hpp>

#include "gravab/continuum.hpp"
#include "gravab/fock_oracle.hpp"
#include "gravab/geometry.hpp"

namespace gravab::cli {

// Flat JSON views of the library result types.
nlohmann::json phase_json(const PhaseEntropyReport& report);
nlohmann::json entropy_json(const PhaseEntropyReport& report);
nlohmann::json diagnostics_json(const PhaseEntropyReport::Diagnostics& d);
nlohmann::json gating_json(const GatingReport& gating);
nlohmann::json fidelity_json(const oracle::FidelityReport& report);
nlohmann::json vec3_json(const Vec3& v);

}  // namespace gravab::cli
