#include "gravab/config.hpp"

#include <cmath>
#include <set>
#include <string>

#include "gravab/error.hpp"

namespace gravab::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::config, message); }

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where + " must be a JSON object");
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!known.contains(key)) fail("unknown key '" + where + "." + key + "'");
  }
}

double number(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail("missing key '" + where + "." + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) fail("'" + where + "." + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail("'" + where + "." + key + "' must be finite");
  return d;
}

double number_or(const json& obj, const std::string& where, const char* key, double fallback) {
  return obj.contains(key) ? number(obj, where, key) : fallback;
}

Vec3 vec3(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail("missing key '" + where + "." + key + "'");
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 3) {
    fail("'" + where + "." + key + "' must be an array of 3 numbers");
  }
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) fail("'" + where + "." + key + "' must be an array of 3 numbers");
    out[i] = v[i].get<double>();
  }
  if (!out.allFinite()) fail("'" + where + "." + key + "' must be finite");
  return out;
}

Vec3 vec3_or(const json& obj, const std::string& where, const char* key, const Vec3& fallback) {
  return obj.contains(key) ? vec3(obj, where, key) : fallback;
}

std::string text(const json& obj, const std::string& where, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_string()) fail("'" + where + "." + key + "' must be a string");
  return v.get<std::string>();
}

json vec3_to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

InterferometerGeometry parse_geometry(const json& g) {
  reject_unknown_keys(g, "geometry",
                      {"upper_arm_position_m", "lower_arm_position_m", "source_position_m",
                       "atom_mass_kg", "source_mass_kg", "interaction_time_s"});
  InterferometerGeometry geom;
  geom.upper_arm = vec3(g, "geometry", "upper_arm_position_m");
  geom.lower_arm = vec3(g, "geometry", "lower_arm_position_m");
  geom.source = vec3(g, "geometry", "source_position_m");
  geom.atom_mass = number(g, "geometry", "atom_mass_kg");
  geom.source_mass = number(g, "geometry", "source_mass_kg");
  geom.interaction_time = number(g, "geometry", "interaction_time_s");
  try {
    geom.validate();
  } catch (const Error& e) {
    fail(std::string{"invalid geometry: "} + e.what());
  }
  return geom;
}

ModeIntegralSettings parse_mode_integral(const json& m) {
  reject_unknown_keys(m, "mode_integral",
                      {"k_min_per_m", "k_max_per_m", "rel_tol", "time_factor",
                       "polarization_factor"});
  ModeIntegralSettings s;
  s.k_min = number_or(m, "mode_integral", "k_min_per_m", 0.0);
  if (m.contains("k_max_per_m") && !m.at("k_max_per_m").is_null()) {
    s.k_max = number(m, "mode_integral", "k_max_per_m");
  }
  s.rel_tol = number_or(m, "mode_integral", "rel_tol", s.rel_tol);
  if (m.contains("time_factor")) {
    s.time_factor =
        entropy_time_factor_from_string(text(m, "mode_integral", "time_factor").c_str());
  }
  s.polarization_factor = number_or(m, "mode_integral", "polarization_factor", 1.0);
  return s;
}

ScenarioConfig parse_scenario(const json& s) {
  reject_unknown_keys(s, "scenario", {"kind", "loop_closure_time_s"});
  if (!s.contains("kind")) fail("missing key 'scenario.kind'");
  ScenarioConfig sc;
  sc.kind = scenario_kind_from_string(text(s, "scenario", "kind").c_str());
  sc.loop_closure_time = number(s, "scenario", "loop_closure_time_s");
  if (sc.loop_closure_time < 0.0) fail("'scenario.loop_closure_time_s' must be >= 0");
  return sc;
}

std::vector<SweepAxis> parse_sweep(const json& s) {
  if (!s.is_array()) fail("'sweep' must be an array of axes");
  if (s.size() > 2) fail("'sweep' supports at most 2 axes");
  std::vector<SweepAxis> axes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::string where = "sweep[" + std::to_string(i) + "]";
    reject_unknown_keys(s[i], where, {"parameter", "values"});
    if (!s[i].contains("parameter") || !s[i].contains("values")) {
      fail(where + " needs 'parameter' and 'values'");
    }
    SweepAxis axis;
    axis.parameter = text(s[i], where, "parameter");
    const json& values = s[i].at("values");
    if (!values.is_array() || values.empty()) fail(where + ".values must be a nonempty array");
    for (const json& v : values) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        fail(where + ".values must contain finite numbers");
      }
      axis.values.push_back(v.get<double>());
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

OracleSettings parse_oracle(const json& o) {
  reject_unknown_keys(o, "oracle",
                      {"omega", "g_source", "g_upper", "g_lower", "wavevector", "source_position",
                       "upper_position", "lower_position", "rest_energy_atom",
                       "rest_energy_source", "time", "truncation"});
  OracleSettings s;
  auto& p = s.params;
  p.omega = number_or(o, "oracle", "omega", p.omega);
  p.g_source = number_or(o, "oracle", "g_source", p.g_source);
  p.g_upper = number_or(o, "oracle", "g_upper", p.g_upper);
  p.g_lower = number_or(o, "oracle", "g_lower", p.g_lower);
  p.k = vec3_or(o, "oracle", "wavevector", p.k);
  p.r_source = vec3_or(o, "oracle", "source_position", p.r_source);
  p.r_upper = vec3_or(o, "oracle", "upper_position", p.r_upper);
  p.r_lower = vec3_or(o, "oracle", "lower_position", p.r_lower);
  p.rest_energy_atom = number_or(o, "oracle", "rest_energy_atom", p.rest_energy_atom);
  p.rest_energy_source = number_or(o, "oracle", "rest_energy_source", p.rest_energy_source);
  s.time = number_or(o, "oracle", "time", s.time);
  if (o.contains("truncation")) {
    if (!o.at("truncation").is_number_integer()) fail("'oracle.truncation' must be an integer");
    s.truncation = o.at("truncation").get<int>();
  }
  if (!(p.omega > 0.0)) fail("'oracle.omega' must be positive");
  if (std::abs(p.omega - p.k.norm()) > 1e-12 * p.omega) {
    fail("'oracle.omega' must equal |oracle.wavevector| (dimensionless units, c = 1)");
  }
  if (s.time < 0.0) fail("'oracle.time' must be >= 0");
  return s;
}

// Splits "a.b[2]" into JSON pointer "/a/b/2".
json::json_pointer sweep_pointer(std::string_view path) {
  std::string ptr;
  std::string token;
  auto flush = [&] {
    if (token.empty()) fail("malformed sweep parameter '" + std::string{path} + "'");
    ptr += "/" + token;
    token.clear();
  };
  for (std::size_t i = 0; i < path.size(); ++i) {
    const char ch = path[i];
    if (ch == '.') {
      flush();
    } else if (ch == '[') {
      flush();
      const auto close = path.find(']', i);
      if (close == std::string_view::npos) fail("malformed sweep parameter '" + std::string{path} + "'");
      token = std::string{path.substr(i + 1, close - i - 1)};
      flush();
      i = close;
      if (i + 1 < path.size() && path[i + 1] == '.') ++i;
    } else {
      token += ch;
    }
  }
  if (!token.empty()) flush();
  return json::json_pointer{ptr};
}

}  // namespace

const char* to_string(OutputFormat f) noexcept { return f == OutputFormat::json ? "json" : "csv"; }

oracle::OracleParams OracleSettings::default_params() {
  oracle::OracleParams p;
  p.omega = 1.0;
  p.g_source = 0.2;
  p.g_upper = 0.1;
  p.g_lower = 0.1;
  p.k = Vec3{0.0, 0.0, 1.0};
  p.r_source = Vec3{0.0, 0.0, 0.0};
  p.r_upper = Vec3{0.0, 0.0, 1.0};
  p.r_lower = Vec3{0.0, 0.0, 2.5};
  return p;
}

ModeIntegralSpec RunConfig::mode_spec(const PhysicalConstants& k) const {
  return mode_spec(cutoff_preset, k);
}

ModeIntegralSpec RunConfig::mode_spec(CutoffPreset preset, const PhysicalConstants& k) const {
  ModeIntegralSpec s;
  s.k_min = mode_integral.k_min;
  s.k_max = mode_integral.k_max.value_or(cutoff_wavenumber(preset, k));
  s.rel_tol = mode_integral.rel_tol;
  s.time_factor = mode_integral.time_factor;
  s.polarization_factor = mode_integral.polarization_factor;
  return s;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  const auto& ga = a.geometry;
  const auto& gb = b.geometry;
  const bool geom = ga.upper_arm == gb.upper_arm && ga.lower_arm == gb.lower_arm &&
                    ga.source == gb.source && ga.atom_mass == gb.atom_mass &&
                    ga.source_mass == gb.source_mass && ga.interaction_time == gb.interaction_time;
  const bool scenario =
      a.scenario.has_value() == b.scenario.has_value() &&
      (!a.scenario || (a.scenario->kind == b.scenario->kind &&
                       a.scenario->loop_closure_time == b.scenario->loop_closure_time));
  const auto& pa = a.oracle.params;
  const auto& pb = b.oracle.params;
  const bool oracle = pa.omega == pb.omega && pa.g_source == pb.g_source &&
                      pa.g_upper == pb.g_upper && pa.g_lower == pb.g_lower && pa.k == pb.k &&
                      pa.r_source == pb.r_source && pa.r_upper == pb.r_upper &&
                      pa.r_lower == pb.r_lower && pa.rest_energy_atom == pb.rest_energy_atom &&
                      pa.rest_energy_source == pb.rest_energy_source &&
                      a.oracle.time == b.oracle.time && a.oracle.truncation == b.oracle.truncation;
  return geom && scenario && oracle && a.mode_integral == b.mode_integral && a.sweep == b.sweep &&
         a.output == b.output && a.cutoff_preset == b.cutoff_preset &&
         a.compare_cutoffs == b.compare_cutoffs;
}

RunConfig parse_config(const json& doc) {
  reject_unknown_keys(doc, "config",
                      {"geometry", "mode_integral", "scenario", "sweep", "output",
                       "cutoff_preset", "compare_cutoffs", "oracle"});
  if (!doc.contains("geometry")) fail("missing key 'config.geometry'");
  RunConfig c;
  c.geometry = parse_geometry(doc.at("geometry"));
  if (doc.contains("mode_integral")) c.mode_integral = parse_mode_integral(doc.at("mode_integral"));
  if (doc.contains("scenario") && !doc.at("scenario").is_null()) {
    c.scenario = parse_scenario(doc.at("scenario"));
  }
  if (doc.contains("sweep")) c.sweep = parse_sweep(doc.at("sweep"));
  if (doc.contains("output")) {
    const std::string out = text(doc, "config", "output");
    if (out == "json") c.output = OutputFormat::json;
    else if (out == "csv") c.output = OutputFormat::csv;
    else fail("'config.output' must be json or csv");
  }
  if (doc.contains("cutoff_preset")) {
    c.cutoff_preset = cutoff_preset_from_string(text(doc, "config", "cutoff_preset").c_str());
  }
  if (doc.contains("compare_cutoffs")) {
    if (!doc.at("compare_cutoffs").is_boolean()) fail("'config.compare_cutoffs' must be a boolean");
    c.compare_cutoffs = doc.at("compare_cutoffs").get<bool>();
  }
  if (doc.contains("oracle")) c.oracle = parse_oracle(doc.at("oracle"));

  try {
    c.mode_spec().validate();
  } catch (const Error& e) {
    fail(std::string{"invalid mode_integral: "} + e.what());
  }
  return c;
}

RunConfig parse_config_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string{"malformed JSON: "} + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& c) {
  json doc;
  const auto& g = c.geometry;
  doc["geometry"] = {{"upper_arm_position_m", vec3_to_json(g.upper_arm)},
                     {"lower_arm_position_m", vec3_to_json(g.lower_arm)},
                     {"source_position_m", vec3_to_json(g.source)},
                     {"atom_mass_kg", g.atom_mass},
                     {"source_mass_kg", g.source_mass},
                     {"interaction_time_s", g.interaction_time}};
  const auto& m = c.mode_integral;
  doc["mode_integral"] = {{"k_min_per_m", m.k_min},
                          {"k_max_per_m", m.k_max ? json(*m.k_max) : json(nullptr)},
                          {"rel_tol", m.rel_tol},
                          {"time_factor", to_string(m.time_factor)},
                          {"polarization_factor", m.polarization_factor}};
  doc["scenario"] = c.scenario ? json{{"kind", to_string(c.scenario->kind)},
                                      {"loop_closure_time_s", c.scenario->loop_closure_time}}
                               : json(nullptr);
  doc["sweep"] = json::array();
  for (const auto& axis : c.sweep) {
    doc["sweep"].push_back({{"parameter", axis.parameter}, {"values", axis.values}});
  }
  doc["output"] = to_string(c.output);
  doc["cutoff_preset"] = to_string(c.cutoff_preset);
  doc["compare_cutoffs"] = c.compare_cutoffs;
  const auto& p = c.oracle.params;
  doc["oracle"] = {{"omega", p.omega},
                   {"g_source", p.g_source},
                   {"g_upper", p.g_upper},
                   {"g_lower", p.g_lower},
                   {"wavevector", vec3_to_json(p.k)},
                   {"source_position", vec3_to_json(p.r_source)},
                   {"upper_position", vec3_to_json(p.r_upper)},
                   {"lower_position", vec3_to_json(p.r_lower)},
                   {"rest_energy_atom", p.rest_energy_atom},
                   {"rest_energy_source", p.rest_energy_source},
                   {"time", c.oracle.time},
                   {"truncation", c.oracle.truncation}};
  return doc;
}

json preset_document(std::string_view name) {
  if (name == "overstreet") {
    return json{{"geometry",
                 {{"upper_arm_position_m", {0.0, 0.0, 0.2}},
                  {"lower_arm_position_m", {0.0, 0.0, 0.1}},
                  {"source_position_m", {0.0, 0.0, 0.3}},
                  {"atom_mass_kg", kRubidium87Mass},
                  {"source_mass_kg", 1250.0},
                  {"interaction_time_s", 1.0}}}};
  }
  fail("unknown preset '" + std::string{name} + "' (available: overstreet)");
}

void set_parameter(RunConfig& config, std::string_view path, double value) {
  json doc = to_json(config);
  const json::json_pointer ptr = sweep_pointer(path);
  if (!doc.contains(ptr)) fail("unknown sweep parameter '" + std::string{path} + "'");
  json& target = doc[ptr];
  const bool optional_number = path == "mode_integral.k_max_per_m" && target.is_null();
  if (!target.is_number() && !optional_number) {
    fail("sweep parameter '" + std::string{path} + "' is not a scalar number");
  }
  target = value;
  config = parse_config(doc);
}

}  // namespace gravab::cli
