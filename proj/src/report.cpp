#include "gravab/report.hpp"

namespace gravab::cli {

using nlohmann::json;

json vec3_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json diagnostics_json(const PhaseEntropyReport::Diagnostics& d) {
  return json{{"phase_quadrature_error_rad", d.phase_quadrature_error},
              {"phase_cutoff_bound_rad", d.phase_cutoff_bound},
              {"entropy_quadrature_error", d.entropy_quadrature_error},
              {"k_min_per_m", d.k_min},
              {"k_max_per_m", d.k_max},
              {"lambda", d.lambda},
              {"radial_integral", d.radial_integral},
              {"planck_mass_kg", d.planck_mass},
              {"time_factor", to_string(d.time_factor)},
              {"entropy_time_factor_overridden", d.entropy_time_factor_overridden},
              {"density_of_states", d.density_of_states}};
}

json phase_json(const PhaseEntropyReport& r) {
  return json{{"ab_phase_quantum_closed_rad", r.ab_phase_closed},
              {"ab_phase_quantum_numeric_rad", r.ab_phase_quantum},
              {"ab_phase_semiclassical_rad", r.semiclassical_phase},
              {"action_phase_rad", r.action_phase},
              {"action_phase_gradient_term_rad", r.action_phase - r.semiclassical_phase}};
}

json entropy_json(const PhaseEntropyReport& r) {
  return json{{"I", r.I_integral},
              {"I_half", 0.5 * r.I_integral},
              {"I_in_planck_mass_units", r.I_in_mass_units},
              {"I_box_normalized", r.I_box_normalized},
              {"linear_entropy", r.linear_entropy},
              {"linear_entropy_small_I", r.linear_entropy_small_I},
              {"visibility", r.visibility}};
}

json gating_json(const GatingReport& g) {
  return json{{"upper_in_contact", g.upper_in_contact},
              {"lower_in_contact", g.lower_in_contact},
              {"light_travel_upper_s", g.light_travel_upper},
              {"light_travel_lower_s", g.light_travel_lower}};
}

json fidelity_json(const oracle::FidelityReport& r) {
  auto complex_json = [](cplx z) { return json::array({z.real(), z.imag()}); };
  return json{{"truncation", r.truncation},
              {"required_truncation", r.required_truncation},
              {"max_displacement", r.max_displacement},
              {"fidelity", r.fidelity},
              {"infidelity", 1.0 - r.fidelity},
              {"amplitude_error_upper", r.amplitude_error_upper},
              {"amplitude_error_lower", r.amplitude_error_lower},
              {"norm_error", r.norm_error},
              {"entropy_field", r.entropy_field},
              {"entropy_atom", r.entropy_atom},
              {"entropy_analytic", r.entropy_analytic},
              {"entropy_discrepancy", r.entropy_discrepancy},
              {"phase_difference_oracle_rad", r.phase_difference_oracle},
              {"phase_difference_full_rad", r.phase_difference_full},
              {"phase_difference_linear_rad", r.phase_difference_linear},
              {"alpha_upper", complex_json(r.alpha_upper)},
              {"alpha_lower", complex_json(r.alpha_lower)}};
}

}  // namespace gravab::cli
