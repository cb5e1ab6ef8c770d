#include "gravab/singlemode.hpp"

#include <cmath>
#include <numbers>

#include "gravab/error.hpp"

namespace gravab {

namespace {
constexpr double kSeriesThreshold = 1e-6;  // |omega t| below which series are used
}

ModeParams ModeParams::make(const Vec3& k, double omega, double polarization_factor,
                            double volume, double speed_of_light) {
  if (!k.allFinite() || !std::isfinite(omega) || omega < 0.0) {
    throw Error(ErrorKind::invalid_argument, "mode wavevector and frequency must be finite");
  }
  if (!(volume > 0.0) || !(polarization_factor > 0.0)) {
    throw Error(ErrorKind::invalid_argument,
                "quantisation volume and polarization factor must be positive");
  }
  const double expected = speed_of_light * k.norm();
  if (std::abs(omega - expected) > 1e-12 * std::max(expected, omega)) {
    throw Error(ErrorKind::invalid_argument, "mode frequency must equal c |k|");
  }
  return ModeParams{k, omega, polarization_factor, volume};
}

ModeParams ModeParams::from_wavevector(const Vec3& k, double polarization_factor, double volume,
                                       double speed_of_light) {
  return make(k, speed_of_light * k.norm(), polarization_factor, volume, speed_of_light);
}

double coupling_constant(double mass, const ModeParams& mode, const PhysicalConstants& constants) {
  if (!(mass >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "coupling requires a non-negative mass");
  }
  if (mode.omega == 0.0) {
    throw Error(ErrorKind::singular_mode, "coupling constant is singular for omega = 0");
  }
  return mass * constants.c *
         std::sqrt(2.0 * std::numbers::pi * constants.G /
                   (constants.hbar * mode.omega * mode.volume)) *
         std::sqrt(mode.polarization_factor);
}

cplx drive(double g_source, double g_arm, const ModeParams& mode, const Vec3& r_source,
           const Vec3& r_arm) {
  return g_source * std::polar(1.0, mode.k.dot(r_source)) +
         g_arm * std::polar(1.0, mode.k.dot(r_arm));
}

cplx displacement_kernel(double omega, double t) {
  const double x = omega * t;
  if (std::abs(x) < kSeriesThreshold) {
    // i t + omega t^2 / 2 - i omega^2 t^3 / 6
    return {omega * t * t / 2.0, t - omega * omega * t * t * t / 6.0};
  }
  // 1 - e^{-ix} = (1 - cos x) + i sin x, with 1 - cos x = 2 sin^2(x/2)
  const double s = std::sin(0.5 * x);
  return cplx{2.0 * s * s, std::sin(x)} / omega;
}

CoherentAmplitude coherent_amplitude(double g_source, double g_arm, const ModeParams& mode,
                                     const Vec3& r_source, const Vec3& r_arm, double t,
                                     AmplitudeConvention convention) {
  if (!(t >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "evolution time must be >= 0");
  }
  const double sign_source = convention == AmplitudeConvention::as_printed ? 1.0 : -1.0;
  const cplx coupling = g_source * std::polar(1.0, sign_source * mode.k.dot(r_source)) +
                        g_arm * std::polar(1.0, -mode.k.dot(r_arm));
  return CoherentAmplitude{displacement_kernel(mode.omega, t) * coupling};
}

double dynamical_phase(double drive_norm_sq, double omega, double t, TimeFactor time_factor) {
  if (!(t >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "evolution time must be >= 0");
  }
  if (t == 0.0) return 0.0;
  if (omega == 0.0) {
    throw Error(ErrorKind::singular_mode, "dynamical phase is singular for omega = 0");
  }
  if (time_factor == TimeFactor::linear) {
    return drive_norm_sq * t / omega;
  }
  const double x = omega * t;
  double shape;  // (x - sin x) / omega^2
  if (std::abs(x) < 1e-2) {
    const double x2 = x * x;
    shape = x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
  } else {
    shape = x - std::sin(x);
  }
  return drive_norm_sq * shape / (omega * omega);
}

double dynamical_phase(double g_source, double g_arm, const ModeParams& mode,
                       const Vec3& r_source, const Vec3& r_arm, double t,
                       TimeFactor time_factor) {
  return dynamical_phase(std::norm(drive(g_source, g_arm, mode, r_source, r_arm)), mode.omega, t,
                         time_factor);
}

cplx overlap(const CoherentAmplitude& a, const CoherentAmplitude& b) {
  return std::exp(-0.5 * (std::norm(a.value) + std::norm(b.value)) + std::conj(a.value) * b.value);
}

}  // namespace gravab
