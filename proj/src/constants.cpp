#include "gravab/constants.hpp"

#include <cmath>
#include <string>
#include <string_view>

#include "gravab/error.hpp"

namespace gravab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::invalid_geometry: return "invalid_geometry";
    case ErrorKind::inconsistent_scenario: return "inconsistent_scenario";
    case ErrorKind::config: return "config";
    case ErrorKind::singular_mode: return "singular_mode";
    case ErrorKind::cutoff_too_small: return "cutoff_too_small";
    case ErrorKind::infrared_divergence: return "infrared_divergence";
    case ErrorKind::truncation_risk: return "truncation_risk";
    case ErrorKind::numerical_instability: return "numerical_instability";
    case ErrorKind::singular_integrand: return "singular_integrand";
  }
  return "unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::invalid_geometry:
    case ErrorKind::inconsistent_scenario:
    case ErrorKind::config:
    case ErrorKind::cutoff_too_small:
    case ErrorKind::singular_integrand:
      return true;
    default:
      return false;
  }
}

PhysicalConstants PhysicalConstants::make(double G, double hbar, double c, double epsilon0) {
  for (double v : {G, hbar, c, epsilon0}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw Error(ErrorKind::invalid_argument, "physical constants must be finite and positive");
    }
  }
  return PhysicalConstants{G, hbar, c, epsilon0};
}

PlanckScale derive_planck_scale(const PhysicalConstants& k) {
  PlanckScale p{};
  p.planck_mass = std::sqrt(k.hbar * k.c / k.G);
  p.planck_length = std::sqrt(k.hbar * k.G / (k.c * k.c * k.c));
  p.planck_wavenumber = 1.0 / p.planck_length;
  return p;
}

double cutoff_wavenumber(CutoffPreset preset, const PhysicalConstants& constants) {
  switch (preset) {
    case CutoffPreset::codata: return derive_planck_scale(constants).planck_wavenumber;
    case CutoffPreset::paper_cutoff: return kPublishedCutoffWavenumber;
  }
  return derive_planck_scale(constants).planck_wavenumber;
}

const char* to_string(CutoffPreset preset) noexcept {
  return preset == CutoffPreset::codata ? "codata" : "paper-cutoff";
}

CutoffPreset cutoff_preset_from_string(const char* name) {
  const std::string_view s{name};
  if (s == "codata") return CutoffPreset::codata;
  if (s == "paper-cutoff") return CutoffPreset::paper_cutoff;
  throw Error(ErrorKind::config, "unknown cutoff preset '" + std::string{s} +
                                     "' (expected codata or paper-cutoff)");
}

}  // namespace gravab
