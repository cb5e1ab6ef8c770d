#include "gravab/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>

#include "gravab/error.hpp"
#include "gravab/semiclassical.hpp"
#include "gravab/special_functions.hpp"

namespace gravab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinCutoffProduct = 1e3;  // k_max * d needed by the phase integral

int oscillation_panels(double length, double frequency) {
  const double n = std::ceil(length * frequency / kPi);
  return static_cast<int>(std::clamp(n, 1.0, 4096.0));
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

// (x - sin x) / x^2
double entropy_kernel(double x) {
  if (x < 0.1) {
    const double x2 = x * x;
    return x / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
  }
  return (x - std::sin(x)) / (x * x);
}

// Closed form of int_a^b (x - sin x)/x^2 dx for 0 < a < b.
double kernel_tail(double a, double b) {
  return std::log(b / a) + std::sin(b) / b - std::sin(a) / a - cosine_integral(b) +
         cosine_integral(a);
}

// [ -sin(s x)/x + s Ci(|s| x) ]_a^b, the antiderivative of sin(s x)/x^2.
double sine_over_square_tail(double s, double a, double b) {
  if (s == 0.0) return 0.0;
  const double as = std::abs(s);
  return (-std::sin(s * b) / b + std::sin(s * a) / a) +
         s * (cosine_integral(as * b) - cosine_integral(as * a));
}

// Closed form of int_a^b cos(tau x)(x - sin x)/x^2 dx for tau > 0.
double cosine_weighted_tail(double tau, double a, double b) {
  const double cos_over_x = cosine_integral(tau * b) - cosine_integral(tau * a);
  const double cos_sin_over_x2 =
      0.5 * (sine_over_square_tail(1.0 + tau, a, b) + sine_over_square_tail(1.0 - tau, a, b));
  return cos_over_x - cos_sin_over_x2;
}

// int_{k_lo}^{k_hi} T(k)/k dk with T the time factor.
double log_mode_integral(const ModeIntegralSpec& spec, double t, const PhysicalConstants& k) {
  if (spec.time_factor == EntropyTimeFactor::unity) {
    if (spec.k_min <= 0.0) {
      throw Error(ErrorKind::infrared_divergence,
                  "entropy with a gated arm diverges as ln(k_max/k_min) under the unity time "
                  "factor; set k_min > 0 or use the exact time factor");
    }
    return std::log(spec.k_max / spec.k_min);
  }
  const double y = k.c * t;
  return entire_cosine_integral(y * spec.k_max) - entire_cosine_integral(y * spec.k_min);
}

}  // namespace

const char* to_string(EntropyTimeFactor tf) noexcept {
  return tf == EntropyTimeFactor::unity ? "unity" : "exact";
}

EntropyTimeFactor entropy_time_factor_from_string(const char* name) {
  const std::string_view s{name};
  if (s == "unity") return EntropyTimeFactor::unity;
  if (s == "exact") return EntropyTimeFactor::exact;
  throw Error(ErrorKind::config,
              "unknown time factor '" + std::string{s} + "' (expected unity or exact)");
}

ModeIntegralSpec ModeIntegralSpec::with_cutoff(CutoffPreset preset,
                                               const PhysicalConstants& constants) {
  ModeIntegralSpec s;
  s.k_max = cutoff_wavenumber(preset, constants);
  return s;
}

void ModeIntegralSpec::validate() const {
  if (!(k_min >= 0.0) || !(k_max > k_min) || !std::isfinite(k_max)) {
    throw Error(ErrorKind::invalid_argument, "mode integral requires 0 <= k_min < k_max");
  }
  if (!(rel_tol > 0.0) || rel_tol > 1e-3) {
    throw Error(ErrorKind::invalid_argument, "rel_tol must lie in (0, 1e-3]");
  }
  if (!(polarization_factor > 0.0) || !std::isfinite(polarization_factor)) {
    throw Error(ErrorKind::invalid_argument, "polarization factor must be positive");
  }
}

double ab_phase_closed_form(const InterferometerGeometry& geom, const PhysicalConstants& k,
                            const ArmWeights& w) {
  const ArmDistances d = arm_distances(geom);
  const double scale = k.G * geom.source_mass * geom.atom_mass * geom.interaction_time / k.hbar;
  return scale * (w.upper / d.upper - w.lower / d.lower);
}

QuadratureResult sinc_radial_integral(double x_lo, double x_hi, double rel_tol) {
  QuadratureResult r;
  const double split = std::min(x_hi, kTailSplit);
  if (split > x_lo) {
    r = integrate(sinc, x_lo, split, rel_tol, oscillation_panels(split - x_lo, 1.0));
  }
  const double a = std::max(x_lo, kTailSplit);
  if (x_hi > a) {
    r.value += sine_integral(x_hi) - sine_integral(a);
  }
  return r;
}

NumericPhase ab_phase_numeric(const InterferometerGeometry& geom, const ModeIntegralSpec& spec,
                              const PhysicalConstants& k, const ArmWeights& w, double volume) {
  geom.validate();
  spec.validate();
  if (!(volume > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "quantisation volume must be positive");
  }
  const ArmDistances d = arm_distances(geom);
  const double d_min = std::min(d.upper, d.lower);
  if (spec.k_max * d_min < kMinCutoffProduct) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "cutoff too small: k_max * min(d) = " << spec.k_max * d_min << " < 1e3; need k_max >= "
        << kMinCutoffProduct / d_min << " 1/m";
    throw Error(ErrorKind::cutoff_too_small, msg.str());
  }

  // Per-mode cross term 2 g_s g_x t cos(k.(r_s - r_x)) / omega, g ~ 1/sqrt(V),
  // summed with V/(2 pi)^3 d^3k; the angular integral gives 4 pi sinc(k d).
  const double mode_density = volume / (8.0 * kPi * kPi * kPi);
  const double per_mode = 4.0 * kPi * k.G * geom.source_mass * geom.atom_mass *
                          geom.interaction_time * spec.polarization_factor / (k.hbar * volume);
  const double prefactor = mode_density * per_mode * 4.0 * kPi;

  NumericPhase out;
  auto arm_phase = [&](double dist, double weight) {
    if (weight == 0.0) return 0.0;
    const QuadratureResult q =
        sinc_radial_integral(spec.k_min * dist, spec.k_max * dist, spec.rel_tol);
    const double scale = weight * prefactor / dist;
    out.quadrature_error += std::abs(scale) * q.error;
    out.cutoff_bound += std::abs(scale) / (spec.k_max * dist);
    return scale * q.value;
  };
  out.phase_upper = arm_phase(d.upper, w.upper);
  out.phase_lower = arm_phase(d.lower, w.lower);
  out.phase = out.phase_upper - out.phase_lower;
  return out;
}

double entropy_kernel_closed_form(double lambda) {
  return std::log(lambda) + std::sin(lambda) / lambda - cosine_integral(lambda) + kEulerGamma -
         1.0;
}

QuadratureResult entropy_kernel_integral(double x_lo, double x_hi, double rel_tol) {
  if (!(x_hi > x_lo) || x_lo < 0.0) {
    throw Error(ErrorKind::invalid_argument, "entropy kernel needs 0 <= x_lo < x_hi");
  }
  QuadratureResult r;
  const double split = std::min(x_hi, kTailSplit);
  if (split > x_lo) {
    r = integrate(entropy_kernel, x_lo, split, rel_tol, oscillation_panels(split - x_lo, 1.0));
  }
  const double a = std::max(x_lo, kTailSplit);
  if (x_hi > a) r.value += kernel_tail(a, x_hi);
  return r;
}

QuadratureResult entropy_kernel_integral_exact(double x_lo, double x_hi, double tau,
                                               double rel_tol) {
  if (!(x_hi > x_lo) || x_lo < 0.0 || !(tau >= 0.0)) {
    throw Error(ErrorKind::invalid_argument,
                "exact entropy kernel needs 0 <= x_lo < x_hi and tau >= 0");
  }
  QuadratureResult r;
  if (tau == 0.0) return r;
  auto integrand = [tau](double x) {
    const double s = std::sin(0.5 * tau * x);
    return 2.0 * s * s * entropy_kernel(x);
  };
  const double split_at = kTailSplit / std::max(1.0, tau);
  const double split = std::min(x_hi, split_at);
  if (split > x_lo) {
    r = integrate(integrand, x_lo, split, rel_tol,
                  oscillation_panels(split - x_lo, 1.0 + tau));
  }
  const double a = std::max(x_lo, split_at);
  if (x_hi > a) r.value += kernel_tail(a, x_hi) - cosine_weighted_tail(tau, a, x_hi);
  return r;
}

EntropyIntegral entropy_integral(double separation, const ModeIntegralSpec& spec, double t,
                                 double atom_mass, const PhysicalConstants& k,
                                 const ArmWeights& w) {
  spec.validate();
  const double lambda = spec.k_max * separation;
  if (!(separation > 0.0) || !(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::invalid_argument,
                "entropy integral needs a positive cutoff product Lambda = k_max * r");
  }
  if (!(atom_mass >= 0.0) || !(t >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "atom mass and time must be >= 0");
  }

  EntropyIntegral out;
  out.lambda = lambda;
  const double x_lo = spec.k_min * separation;
  const double both = w.upper * w.lower;
  const double imbalance = (w.upper - w.lower) * (w.upper - w.lower);

  double bracket = 0.0;  // (w_u - w_d)^2 L + 2 w_u w_d F
  if (both != 0.0) {
    const QuadratureResult f =
        spec.time_factor == EntropyTimeFactor::unity
            ? entropy_kernel_integral(x_lo, lambda, spec.rel_tol)
            : entropy_kernel_integral_exact(x_lo, lambda, k.c * t / separation, spec.rel_tol);
    out.radial_integral = f.value;
    bracket += 2.0 * both * f.value;
    out.quadrature_error = 2.0 * std::abs(both) * f.error;
  }
  if (imbalance != 0.0) {
    bracket += imbalance * log_mode_integral(spec, t, k);
  }

  const double planck_mass = derive_planck_scale(k).planck_mass;
  const double mass_ratio_sq = (atom_mass / planck_mass) * (atom_mass / planck_mass);
  const double prefactor = 16.0 * kPi * kPi * spec.polarization_factor;
  out.in_mass_units = prefactor * bracket;
  out.value = out.in_mass_units * mass_ratio_sq;
  out.quadrature_error *= prefactor * mass_ratio_sq;
  out.box_normalized = out.value / (8.0 * kPi * kPi * kPi);
  return out;
}

double visibility_from_exponent(double I) { return std::exp(-0.5 * I); }

double linear_entropy_from_exponent(double I) { return -0.5 * std::expm1(-I); }

LinearEntropy linear_entropy_continuum(const InterferometerGeometry& geom,
                                       const ModeIntegralSpec& spec, const PhysicalConstants& k,
                                       const ArmWeights& w) {
  geom.validate();
  LinearEntropy out;
  out.integral = entropy_integral(arm_separation(geom), spec, geom.interaction_time,
                                  geom.atom_mass, k, w);
  out.exact = linear_entropy_from_exponent(out.integral.value);
  out.small_I = 0.5 * out.integral.value;
  return out;
}

double visibility(const InterferometerGeometry& geom, const ModeIntegralSpec& spec,
                  const PhysicalConstants& k, const ArmWeights& w) {
  return visibility_from_exponent(linear_entropy_continuum(geom, spec, k, w).integral.value);
}

double single_mode_decoherence_exponent(double omega, const Vec3& kvec, double g_upper,
                                        double g_lower, const Vec3& r_upper,
                                        const Vec3& r_lower, double t) {
  const double x = omega * t;
  const double s = std::sin(0.5 * x);
  const double kernel_sq = 4.0 * s * s / (omega * omega);  // |1 - e^{-i x}|^2 / omega^2
  const std::complex<double> diff =
      g_upper * std::polar(1.0, -kvec.dot(r_upper)) - g_lower * std::polar(1.0, -kvec.dot(r_lower));
  return kernel_sq * std::norm(diff);
}

PhaseEntropyReport evaluate_report(const InterferometerGeometry& geom,
                                   const ModeIntegralSpec& spec, const PhysicalConstants& k,
                                   const ArmWeights& w) {
  geom.validate();
  spec.validate();
  PhaseEntropyReport r;

  r.ab_phase_closed = ab_phase_closed_form(geom, k, w);
  const NumericPhase numeric = ab_phase_numeric(geom, spec, k, w);
  r.ab_phase_quantum = numeric.phase;

  const PotentialModel potential = PotentialModel::from_geometry(geom);
  const ActionPhaseTerms action = action_phase_terms(geom, potential, k, w);
  r.semiclassical_phase = action.potential;
  r.action_phase = action.total();

  ModeIntegralSpec entropy_spec = spec;
  LinearEntropy entropy;
  try {
    entropy = linear_entropy_continuum(geom, entropy_spec, k, w);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::infrared_divergence) throw;
    entropy_spec.time_factor = EntropyTimeFactor::exact;
    entropy = linear_entropy_continuum(geom, entropy_spec, k, w);
    r.diagnostics.entropy_time_factor_overridden = true;
  }
  r.I_integral = entropy.integral.value;
  r.I_in_mass_units = entropy.integral.in_mass_units;
  r.I_box_normalized = entropy.integral.box_normalized;
  r.linear_entropy = entropy.exact;
  r.linear_entropy_small_I = entropy.small_I;
  r.visibility = visibility_from_exponent(entropy.integral.value);

  r.diagnostics.phase_quadrature_error = numeric.quadrature_error;
  r.diagnostics.phase_cutoff_bound = numeric.cutoff_bound;
  r.diagnostics.entropy_quadrature_error = entropy.integral.quadrature_error;
  r.diagnostics.k_min = spec.k_min;
  r.diagnostics.k_max = spec.k_max;
  r.diagnostics.lambda = entropy.integral.lambda;
  r.diagnostics.radial_integral = entropy.integral.radial_integral;
  r.diagnostics.planck_mass = derive_planck_scale(k).planck_mass;
  r.diagnostics.time_factor = entropy_spec.time_factor;
  return r;
}

}  // namespace gravab
