#pragma once

// Observables summed over the graviton mode continuum.
//
// Mode sums become k-space integrals; the angular part is done analytically
// and the radial part by quadrature on [0, x0] plus a closed-form tail built
// from Ci/Si, with x = k * distance the integration variable.

#include <string>

#include "gravab/constants.hpp"
#include "gravab/geometry.hpp"
#include "gravab/special_functions.hpp"

namespace gravab {

enum class EntropyTimeFactor {
  unity,  // (1 - cos ckt) replaced by 1
  exact,  // keeps (1 - cos ckt) under the radial integral
};

const char* to_string(EntropyTimeFactor tf) noexcept;
EntropyTimeFactor entropy_time_factor_from_string(const char* name);

// Split point between quadrature and the analytic tail.
inline constexpr double kTailSplit = 50.0;

struct ModeIntegralSpec {
  double k_min = 0.0;  // 1/m
  double k_max = 0.0;  // 1/m
  double rel_tol = 1e-9;
  EntropyTimeFactor time_factor = EntropyTimeFactor::unity;
  double polarization_factor = 1.0;

  static ModeIntegralSpec with_cutoff(CutoffPreset preset,
                                      const PhysicalConstants& constants = codata2018);

  // 0 <= k_min < k_max, rel_tol in (0, 1e-3], polarization_factor > 0.
  void validate() const;
};

// ---- AB phase --------------------------------------------------------------

// G M m t / hbar * (w_u / d_u - w_d / d_d)
double ab_phase_closed_form(const InterferometerGeometry& geom,
                            const PhysicalConstants& constants = codata2018,
                            const ArmWeights& weights = {});

// int_{x_lo}^{x_hi} sin(x)/x dx
QuadratureResult sinc_radial_integral(double x_lo, double x_hi, double rel_tol);

struct NumericPhase {
  double phase = 0.0;        // rad, upper minus lower
  double phase_upper = 0.0;  // rad
  double phase_lower = 0.0;  // rad
  double quadrature_error = 0.0;
  double cutoff_bound = 0.0;  // bound on the finite-cutoff deviation, rad
};

// Sums the linear-time cross term 2 g_s g_x t cos(k.(r_s - r_x)) / omega over
// modes with density of states V/(2 pi)^3. The volume argument exists to show
// it cancels. Needs k_max * min(d_u, d_d) >= 1e3, else Error(cutoff_too_small).
NumericPhase ab_phase_numeric(const InterferometerGeometry& geom, const ModeIntegralSpec& spec,
                              const PhysicalConstants& constants = codata2018,
                              const ArmWeights& weights = {}, double volume = 1.0);

// ---- Entanglement entropy ---------------------------------------------------

// F(L) = int_0^L (x - sin x)/x^2 dx = ln L + sin L / L - Ci(L) + gamma - 1
double entropy_kernel_closed_form(double lambda);

// int_{x_lo}^{x_hi} (x - sin x)/x^2 dx for x_hi > x_lo >= 0.
QuadratureResult entropy_kernel_integral(double x_lo, double x_hi, double rel_tol);

// int_{x_lo}^{x_hi} (1 - cos(tau x)) (x - sin x)/x^2 dx
QuadratureResult entropy_kernel_integral_exact(double x_lo, double x_hi, double tau,
                                               double rel_tol);

struct EntropyIntegral {
  double value = 0.0;            // I, dimensionless
  double in_mass_units = 0.0;    // I / (m / m_p)^2
  double box_normalized = 0.0;   // I / (2 pi)^3, the V/(2 pi)^3 mode-density convention
  double lambda = 0.0;           // k_max * r
  double radial_integral = 0.0;  // F (or its exact-time-factor variant)
  double quadrature_error = 0.0;
};

// I = 32 pi^2 G m^2 / (c hbar) * F(k_max r) for both arms coupled. With arm
// weights the integrand becomes (w_u - w_d)^2 / x + 2 w_u w_d (x - sin x)/x^2
// (times 1/2 of the prefactor); the first piece diverges logarithmically at
// k -> 0 under the unity time factor and raises Error(infrared_divergence)
// unless k_min > 0.
EntropyIntegral entropy_integral(double separation, const ModeIntegralSpec& spec, double t,
                                 double atom_mass,
                                 const PhysicalConstants& constants = codata2018,
                                 const ArmWeights& weights = {});

struct LinearEntropy {
  double exact = 0.0;     // (1 - e^{-I}) / 2
  double small_I = 0.0;   // I / 2
  EntropyIntegral integral;
};

LinearEntropy linear_entropy_continuum(const InterferometerGeometry& geom,
                                       const ModeIntegralSpec& spec,
                                       const PhysicalConstants& constants = codata2018,
                                       const ArmWeights& weights = {});

double visibility_from_exponent(double I);       // exp(-I/2)
double linear_entropy_from_exponent(double I);   // (1 - exp(-I))/2

double visibility(const InterferometerGeometry& geom, const ModeIntegralSpec& spec,
                  const PhysicalConstants& constants = codata2018,
                  const ArmWeights& weights = {});

// |alpha_u - alpha_d|^2 for a single mode in dimensionless units:
// 2 (1 - cos omega t) / omega^2 * |g_u e^{-ik.r_u} - g_d e^{-ik.r_d}|^2.
double single_mode_decoherence_exponent(double omega, const Vec3& k, double g_upper,
                                        double g_lower, const Vec3& r_upper,
                                        const Vec3& r_lower, double t);

// ---- Combined report --------------------------------------------------------

struct PhaseEntropyReport {
  double ab_phase_quantum = 0.0;     // numeric mode integral, rad
  double ab_phase_closed = 0.0;      // rad
  double semiclassical_phase = 0.0;  // potential-difference phase, rad
  double action_phase = 0.0;         // potential plus gradient terms, rad
  double linear_entropy = 0.0;
  double linear_entropy_small_I = 0.0;
  double I_integral = 0.0;
  double I_in_mass_units = 0.0;
  double I_box_normalized = 0.0;
  double visibility = 1.0;

  struct Diagnostics {
    double phase_quadrature_error = 0.0;
    double phase_cutoff_bound = 0.0;
    double entropy_quadrature_error = 0.0;
    double k_min = 0.0;
    double k_max = 0.0;
    double lambda = 0.0;
    double radial_integral = 0.0;
    double planck_mass = 0.0;
    EntropyTimeFactor time_factor = EntropyTimeFactor::unity;
    bool entropy_time_factor_overridden = false;
    std::string density_of_states = "V/(2pi)^3";
  } diagnostics;
};

// Evaluates every phase and the entropy for one geometry. When a gated arm
// makes the unity-time-factor entropy divergent (k_min == 0), the entropy is
// evaluated with the exact time factor and the override is flagged.
PhaseEntropyReport evaluate_report(const InterferometerGeometry& geom,
                                   const ModeIntegralSpec& spec,
                                   const PhysicalConstants& constants = codata2018,
                                   const ArmWeights& weights = {});

}  // namespace gravab
