#pragma once

#include <complex>

#include "gravab/constants.hpp"
#include "gravab/geometry.hpp"

namespace gravab {

using cplx = std::complex<double>;

// One field mode. omega must equal speed_of_light * |k|; the speed is a
// parameter so the same type serves SI runs (c) and dimensionless ones (1).
struct ModeParams {
  Vec3 k{0.0, 0.0, 0.0};           // 1/m
  double omega = 0.0;              // rad/s
  double polarization_factor = 1;  // effective sum of c_lambda^2
  double volume = 1.0;             // quantisation volume, m^3

  static ModeParams make(const Vec3& k, double omega, double polarization_factor = 1.0,
                         double volume = 1.0, double speed_of_light = codata2018.c);

  // omega derived from |k|.
  static ModeParams from_wavevector(const Vec3& k, double polarization_factor = 1.0,
                                    double volume = 1.0,
                                    double speed_of_light = codata2018.c);
};

// Displacement of the field mode, dimensionless.
struct CoherentAmplitude {
  cplx value{0.0, 0.0};
};

// g = m c sqrt(2 pi G / (hbar omega V)) * sqrt(polarization_factor), rad/s.
// Throws Error(singular_mode) for omega == 0.
double coupling_constant(double mass, const ModeParams& mode,
                         const PhysicalConstants& constants = codata2018);

// Which complex phase is attached to the arm coupling in the coherent amplitude.
//
// as_printed:  (g_s e^{+ik.r_s} + g_x e^{-ik.r_x})   (mixed signs)
// hamiltonian: conj(drive) = (g_s e^{-ik.r_s} + g_x e^{-ik.r_x}), the amplitude
//              actually generated by the single-mode Hamiltonian whose phase
//              is |drive|^2. Both agree when k.r_s = 0 mod pi.
enum class AmplitudeConvention { as_printed, hamiltonian };

// drive = g_s e^{ik.r_s} + g_x e^{ik.r_x}, rad/s.
cplx drive(double g_source, double g_arm, const ModeParams& mode, const Vec3& r_source,
           const Vec3& r_arm);

// (1 - e^{-i omega t}) / omega, switching to a Taylor series for |omega t| < 1e-6.
cplx displacement_kernel(double omega, double t);

// alpha = displacement_kernel(omega, t) * (coupling sum under the chosen convention).
CoherentAmplitude coherent_amplitude(double g_source, double g_arm, const ModeParams& mode,
                                     const Vec3& r_source, const Vec3& r_arm, double t,
                                     AmplitudeConvention convention =
                                         AmplitudeConvention::as_printed);

enum class TimeFactor {
  full,    // |drive|^2 (omega t - sin omega t) / omega^2, exact single-mode result
  linear,  // |drive|^2 t / omega, the long-time form
};

double dynamical_phase(double g_source, double g_arm, const ModeParams& mode,
                       const Vec3& r_source, const Vec3& r_arm, double t,
                       TimeFactor time_factor = TimeFactor::full);

// Same, from a precomputed |drive|^2.
double dynamical_phase(double drive_norm_sq, double omega, double t, TimeFactor time_factor);

// <a|b> = exp(-(|a|^2 + |b|^2)/2 + conj(a) b)
cplx overlap(const CoherentAmplitude& a, const CoherentAmplitude& b);

}  // namespace gravab
