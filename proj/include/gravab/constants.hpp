#pragma once

// Physical constants and Planck-scale quantities. SI units throughout.

namespace gravab {

struct PhysicalConstants {
  double G;         // m^3 kg^-1 s^-2
  double hbar;      // J s
  double c;         // m/s
  double epsilon0;  // F/m

  // Throws Error(invalid_argument) unless every field is finite and > 0.
  static PhysicalConstants make(double G, double hbar, double c, double epsilon0);

  double mu0() const { return 1.0 / (epsilon0 * c * c); }
};

// CODATA 2018 recommended values.
inline constexpr PhysicalConstants codata2018{
    6.67430e-11, 1.054571817e-34, 299792458.0, 8.8541878128e-12};

struct PlanckScale {
  double planck_mass;        // kg
  double planck_length;      // m
  double planck_wavenumber;  // 1/m
};

PlanckScale derive_planck_scale(const PhysicalConstants& constants);

// Hard wavenumber cutoffs for the mode integrals.
enum class CutoffPreset {
  codata,        // 1/planck_length
  paper_cutoff,  // 1e32 per metre, the order of magnitude quoted in the literature estimate
};

inline constexpr double kPublishedCutoffWavenumber = 1e32;

double cutoff_wavenumber(CutoffPreset preset, const PhysicalConstants& constants);

const char* to_string(CutoffPreset preset) noexcept;
CutoffPreset cutoff_preset_from_string(const char* name);

// Atom masses used by the entropy estimates.
inline constexpr double kRubidium87Mass = 1.443e-25;      // kg
inline constexpr double kPublishedAtomMass = 16e-27;      // kg, as used in the published estimate
inline constexpr double kPublishedPlanckMass = 2.2e-8;    // kg, rounded value used in the published estimate

}  // namespace gravab
