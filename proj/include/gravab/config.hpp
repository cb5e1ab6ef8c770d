#pragma once

// JSON run configuration for the gravab tool. Physical quantities carry SI
// unit suffixes in their key names (source_mass_kg, interaction_time_s, ...);
// the oracle block is dimensionless.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gravab/continuum.hpp"
#include "gravab/fock_oracle.hpp"
#include "gravab/geometry.hpp"

namespace gravab::cli {

enum class OutputFormat { json, csv };

const char* to_string(OutputFormat f) noexcept;

struct ModeIntegralSettings {
  double k_min = 0.0;
  std::optional<double> k_max;  // unset: taken from the cutoff preset
  double rel_tol = 1e-9;
  EntropyTimeFactor time_factor = EntropyTimeFactor::unity;
  double polarization_factor = 1.0;

  bool operator==(const ModeIntegralSettings&) const = default;
};

struct SweepAxis {
  std::string parameter;  // e.g. "geometry.interaction_time_s" or "geometry.upper_arm_position_m[2]"
  std::vector<double> values;

  bool operator==(const SweepAxis&) const = default;
};

struct OracleSettings {
  oracle::OracleParams params = default_params();
  double time = 1.0;
  int truncation = 40;

  // Weak-coupling point: omega = 1, g_s = 0.2, g_u = g_d = 0.1.
  static oracle::OracleParams default_params();
};

struct RunConfig {
  InterferometerGeometry geometry;
  ModeIntegralSettings mode_integral;
  std::optional<ScenarioConfig> scenario;
  std::vector<SweepAxis> sweep;
  OutputFormat output = OutputFormat::json;
  CutoffPreset cutoff_preset = CutoffPreset::codata;
  bool compare_cutoffs = false;
  OracleSettings oracle;

  // Mode-integral spec with k_max filled in from the preset when unset.
  ModeIntegralSpec mode_spec(const PhysicalConstants& constants = codata2018) const;
  ModeIntegralSpec mode_spec(CutoffPreset preset,
                             const PhysicalConstants& constants = codata2018) const;
};

bool operator==(const RunConfig& a, const RunConfig& b);

// Throws Error(config) with the offending key in the message. Unknown keys
// are rejected.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(std::string_view text);

nlohmann::json to_json(const RunConfig& config);

// Named starting configurations. "overstreet": a 1250 kg source mass with
// Rb-87 atoms, arms 0.1 m and 0.2 m from the source, 1 s interaction. The
// distances are illustrative, not measured values.
nlohmann::json preset_document(std::string_view name);

// Sets a scalar field addressed by a sweep path. Throws Error(config) for
// unknown or non-scalar paths.
void set_parameter(RunConfig& config, std::string_view path, double value);

}  // namespace gravab::cli
