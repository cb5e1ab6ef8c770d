#include "gravab/runner.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gravab/error.hpp"
#include "gravab/report.hpp"
#include "gravab/semiclassical.hpp"

namespace gravab::cli {

using nlohmann::json;

namespace {

// Published order-of-magnitude values for the atom-field entanglement estimate.
constexpr double kPublishedMassUnitsI = 1e4;
constexpr double kPublishedLinearEntropy = 1e-29;
constexpr double kPublishedRadialIntegral = 1e3 / 32.0;  // 32 F ~ 1e3

json phase_block(const RunConfig& c, const ModeIntegralSpec& spec, const PhysicalConstants& k) {
  const auto& geom = c.geometry;
  const NumericPhase numeric = ab_phase_numeric(geom, spec, k);
  const PotentialModel potential = PotentialModel::from_geometry(geom);
  const ActionPhaseTerms action = action_phase_terms(geom, potential, k);
  const ArmDistances d = arm_distances(geom);
  return json{{"ab_phase_quantum_closed_rad", ab_phase_closed_form(geom, k)},
              {"ab_phase_quantum_numeric_rad", numeric.phase},
              {"ab_phase_semiclassical_rad", action.potential},
              {"action_phase_rad", action.total()},
              {"action_phase_gradient_term_rad", action.gradient},
              {"arm_distances_m", {{"upper", d.upper}, {"lower", d.lower}}},
              {"diagnostics",
               {{"phase_quadrature_error_rad", numeric.quadrature_error},
                {"phase_cutoff_bound_rad", numeric.cutoff_bound},
                {"k_min_per_m", spec.k_min},
                {"k_max_per_m", spec.k_max},
                {"density_of_states", "V/(2pi)^3"},
                {"sign_convention",
                 "quantum: +GMmt/hbar (1/d_u - 1/d_d); semiclassical: V = -GM/r, "
                 "(m/hbar) t [V(x_u) - V(x_d)]"}}}};
}

json entropy_block(const InterferometerGeometry& geom, const ModeIntegralSpec& spec,
                   const PhysicalConstants& k) {
  const LinearEntropy e = linear_entropy_continuum(geom, spec, k);
  return json{{"I", e.integral.value},
              {"I_half", 0.5 * e.integral.value},
              {"I_in_planck_mass_units", e.integral.in_mass_units},
              {"I_box_normalized", e.integral.box_normalized},
              {"linear_entropy", e.exact},
              {"linear_entropy_small_I", e.small_I},
              {"visibility", visibility_from_exponent(e.integral.value)},
              {"diagnostics",
               {{"lambda", e.integral.lambda},
                {"radial_integral", e.integral.radial_integral},
                {"quadrature_error", e.integral.quadrature_error},
                {"k_min_per_m", spec.k_min},
                {"k_max_per_m", spec.k_max},
                {"time_factor", to_string(spec.time_factor)},
                {"separation_m", arm_separation(geom)}}}};
}

json reference_comparison(const RunConfig& c, const PhysicalConstants& k) {
  json recomputed = json::array();
  const struct {
    const char* label;
    double mass;
  } masses[] = {{"published_atom_mass", kPublishedAtomMass}, {"rubidium_87", kRubidium87Mass}};
  for (CutoffPreset preset : {CutoffPreset::codata, CutoffPreset::paper_cutoff}) {
    ModeIntegralSpec spec = c.mode_spec(preset, k);
    if (!c.mode_integral.k_max) spec.k_max = cutoff_wavenumber(preset, k);
    for (const auto& m : masses) {
      InterferometerGeometry geom = c.geometry;
      geom.atom_mass = m.mass;
      const LinearEntropy e = linear_entropy_continuum(geom, spec, k);
      recomputed.push_back({{"cutoff_preset", to_string(preset)},
                            {"k_max_per_m", spec.k_max},
                            {"atom", m.label},
                            {"atom_mass_kg", m.mass},
                            {"lambda", e.integral.lambda},
                            {"radial_integral", e.integral.radial_integral},
                            {"I_in_planck_mass_units", e.integral.in_mass_units},
                            {"I", e.integral.value},
                            {"linear_entropy", e.exact},
                            {"linear_entropy_small_I", e.small_I}});
    }
  }
  const double quoted_ratio = kPublishedAtomMass / kPublishedPlanckMass;
  return json{{"published",
               {{"I_in_planck_mass_units", kPublishedMassUnitsI},
                {"radial_integral", kPublishedRadialIntegral},
                {"atom_mass_kg", kPublishedAtomMass},
                {"planck_mass_kg", kPublishedPlanckMass},
                {"linear_entropy", kPublishedLinearEntropy},
                {"I_from_quoted_inputs", kPublishedMassUnitsI * quoted_ratio * quoted_ratio}}},
              {"recomputed", recomputed}};
}

json report_block(const PhaseEntropyReport& r) {
  json block = phase_json(r);
  block.update(entropy_json(r));
  block["diagnostics"] = diagnostics_json(r.diagnostics);
  return block;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::config, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void flatten(const json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], prefix + "." + std::to_string(i), out);
    }
  } else if (node.is_number_float()) {
    out.emplace_back(prefix, format_number(node.get<double>()));
  } else if (node.is_number()) {
    out.emplace_back(prefix, node.dump());
  } else if (node.is_boolean()) {
    out.emplace_back(prefix, node.get<bool>() ? "true" : "false");
  } else if (node.is_string()) {
    std::string s = node.get<std::string>();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      s = quoted + "\"";
    }
    out.emplace_back(prefix, s);
  } else {
    out.emplace_back(prefix, "");
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

json run_phase(const RunConfig& c, const PhysicalConstants& k) {
  json doc = phase_block(c, c.mode_spec(k), k);
  doc["command"] = "phase";
  doc["cutoff_preset"] = to_string(c.cutoff_preset);
  return doc;
}

json run_entropy(const RunConfig& c, const PhysicalConstants& k) {
  json doc = entropy_block(c.geometry, c.mode_spec(k), k);
  doc["command"] = "entropy";
  doc["cutoff_preset"] = to_string(c.cutoff_preset);
  doc["planck_mass_kg"] = derive_planck_scale(k).planck_mass;
  if (c.compare_cutoffs) {
    for (CutoffPreset preset : {CutoffPreset::codata, CutoffPreset::paper_cutoff}) {
      ModeIntegralSpec spec = c.mode_spec(preset, k);
      spec.k_max = cutoff_wavenumber(preset, k);
      doc["cutoff_comparison"][to_string(preset)] = entropy_block(c.geometry, spec, k);
    }
  }
  doc["reference_comparison"] = reference_comparison(c, k);
  return doc;
}

json run_scenario(const RunConfig& c, const PhysicalConstants& k) {
  if (!c.scenario) throw Error(ErrorKind::config, "scenario subcommand needs a 'scenario' block");
  const GatingReport gating = causal_gating(c.geometry, *c.scenario, k);
  const ModeIntegralSpec spec = c.mode_spec(k);
  const PhaseEntropyReport gated = evaluate_report(c.geometry, spec, k, arm_weights(gating));
  const PhaseEntropyReport baseline = evaluate_report(c.geometry, spec, k);

  json delta;
  const json g = report_block(gated);
  const json b = report_block(baseline);
  for (const auto& [key, value] : g.items()) {
    if (value.is_number() && b.contains(key)) {
      delta[key] = value.get<double>() - b.at(key).get<double>();
    }
  }
  return json{{"command", "scenario"},
              {"scenario",
               {{"kind", to_string(c.scenario->kind)},
                {"loop_closure_time_s", c.scenario->loop_closure_time}}},
              {"gating", gating_json(gating)},
              {"gated", g},
              {"baseline", b},
              {"delta", delta},
              {"cutoff_preset", to_string(c.cutoff_preset)}};
}

json run_oracle(const RunConfig& c) {
  const auto& o = c.oracle;
  if (o.truncation < 1 || o.truncation > oracle::kMaxTruncation) {
    throw Error(ErrorKind::config, "oracle truncation must lie in [1, 512]");
  }
  json doc = fidelity_json(oracle::compare_with_analytic(o.params, o.time, o.truncation));
  doc["command"] = "oracle";
  doc["time"] = o.time;
  doc["params"] = to_json(c)["oracle"];
  return doc;
}

json run_sweep(const RunConfig& c, const PhysicalConstants& k, unsigned threads) {
  if (c.sweep.empty()) throw Error(ErrorKind::config, "sweep subcommand needs a 'sweep' block");

  std::vector<RunConfig> points;
  std::vector<json> labels;
  const SweepAxis& first = c.sweep[0];
  const std::vector<double> second_values =
      c.sweep.size() > 1 ? c.sweep[1].values : std::vector<double>{0.0};
  for (double v0 : first.values) {
    for (double v1 : second_values) {
      RunConfig point = c;
      point.sweep.clear();
      set_parameter(point, first.parameter, v0);
      json label{{first.parameter, v0}};
      if (c.sweep.size() > 1) {
        set_parameter(point, c.sweep[1].parameter, v1);
        label[c.sweep[1].parameter] = v1;
      }
      points.push_back(std::move(point));
      labels.push_back(std::move(label));
    }
  }

  std::vector<json> rows(points.size());
  std::vector<std::exception_ptr> failures(points.size());
  auto work = [&](std::size_t i) {
    try {
      const RunConfig& p = points[i];
      ArmWeights weights;
      if (p.scenario) weights = arm_weights(causal_gating(p.geometry, *p.scenario, k));
      const PhaseEntropyReport r = evaluate_report(p.geometry, p.mode_spec(k), k, weights);
      json row = labels[i];
      row.update(phase_json(r));
      row.update(entropy_json(r));
      rows[i] = std::move(row);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += threads) work(i);
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  json parameters = json::array();
  for (const auto& axis : c.sweep) parameters.push_back(axis.parameter);
  return json{{"command", "sweep"},
              {"parameters", parameters},
              {"cutoff_preset", to_string(c.cutoff_preset)},
              {"rows", rows}};
}

std::string render(const json& doc, OutputFormat format) {
  if (format == OutputFormat::json) return doc.dump(2) + "\n";

  std::ostringstream out;
  auto write_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  if (doc.contains("rows") && doc.at("rows").is_array()) {
    std::vector<std::string> header;
    std::vector<std::vector<std::pair<std::string, std::string>>> flat;
    for (const json& row : doc.at("rows")) {
      flat.emplace_back();
      flatten(row, "", flat.back());
      for (const auto& [key, _] : flat.back()) {
        if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
      }
    }
    write_row(header);
    for (const auto& cells : flat) {
      std::vector<std::string> line(header.size());
      for (const auto& [key, value] : cells) {
        line[std::find(header.begin(), header.end(), key) - header.begin()] = value;
      }
      write_row(line);
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(doc, "", cells);
  std::vector<std::string> header, values;
  for (auto& [key, value] : cells) {
    header.push_back(key);
    values.push_back(value);
  }
  write_row(header);
  write_row(values);
  return out.str();
}

CommandOutcome run_command(int argc, const char* const* argv) {
  CLI::App app{"gravab: gravitational Aharonov-Bohm phase and atom-field entanglement"};
  app.require_subcommand(1);

  std::string config_path;
  std::string preset;
  std::string output;
  std::string cutoff;
  std::string out_path;
  int truncation = -1;
  unsigned threads = 0;

  const char* names[] = {"phase", "entropy", "scenario", "oracle", "sweep"};
  const char* help[] = {"AB phase: quantum closed form, mode integral and semiclassical",
                        "atom-field linear entropy, visibility and reference estimates",
                        "causal gating scenarios (full-interaction, one-arm, no-arm)",
                        "truncated Fock-space check of the single-mode solution",
                        "phase and entropy over a parameter grid"};
  for (int i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--preset", preset, "start from a named configuration (overstreet)");
    sub->add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--cutoff", cutoff, "codata or paper-cutoff")
        ->check(CLI::IsMember({"codata", "paper-cutoff"}));
    sub->add_option("--out", out_path, "write the result to this file");
    if (std::string_view{names[i]} == "oracle") {
      sub->add_option("--truncation", truncation, "Fock truncation N (<= 512)");
    }
    if (std::string_view{names[i]} == "sweep") {
      sub->add_option("--threads", threads, "worker threads (0 = hardware)");
    }
  }

  CommandOutcome outcome;
  auto error_outcome = [&](int code, const std::string& kind, const std::string& message) {
    outcome.exit_code = code;
    outcome.stdout_text =
        json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump(2) + "\n";
    outcome.stderr_text = "gravab: " + message + "\n";
    return outcome;
  };

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    outcome.stdout_text = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    return error_outcome(kExitConfigError, "usage", e.what());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (config_path.empty() && preset.empty() && command != "oracle") {
      throw Error(ErrorKind::config, "either --config or --preset is required");
    }
    json doc = preset.empty() ? json::object() : preset_document(preset);
    if (!config_path.empty()) {
      json file;
      try {
        file = json::parse(read_file(config_path));
      } catch (const json::parse_error& e) {
        throw Error(ErrorKind::config, std::string{"malformed JSON: "} + e.what());
      }
      if (!file.is_object()) throw Error(ErrorKind::config, "config must be a JSON object");
      doc.merge_patch(file);
    }
    // The oracle runs in its own dimensionless units and never reads the geometry.
    if (command == "oracle" && !doc.contains("geometry")) {
      doc["geometry"] = preset_document("overstreet").at("geometry");
    }
    RunConfig config = parse_config(doc);
    if (!output.empty()) config.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!cutoff.empty()) config.cutoff_preset = cutoff_preset_from_string(cutoff.c_str());
    if (truncation >= 0) config.oracle.truncation = truncation;

    json result;
    if (command == "phase") result = run_phase(config);
    else if (command == "entropy") result = run_entropy(config);
    else if (command == "scenario") result = run_scenario(config);
    else if (command == "oracle") result = run_oracle(config);
    else result = run_sweep(config, codata2018, threads);

    std::string rendered = render(result, config.output);
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::config, "cannot write '" + out_path + "'");
      file << rendered;
      outcome.stderr_text = "gravab: wrote " + out_path + "\n";
    } else {
      outcome.stdout_text = std::move(rendered);
    }
    return outcome;
  } catch (const Error& e) {
    return error_outcome(is_input_error(e.kind()) ? kExitConfigError : kExitNumericalError,
                         to_string(e.kind()), e.what());
  } catch (const json::exception& e) {
    return error_outcome(kExitConfigError, "config", e.what());
  } catch (const std::exception& e) {
    return error_outcome(kExitNumericalError, "internal", e.what());
  }
}

}  // namespace gravab::cli
