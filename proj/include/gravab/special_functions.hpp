#pragma once

#include <functional>

namespace gravab {

inline constexpr double kEulerGamma = 0.57721566490153286061;

double cosine_integral(double x);  // Ci(x), x > 0
double sine_integral(double x);    // Si(x)

// Cin(x) = gamma + ln x - Ci(x) = int_0^x (1 - cos t)/t dt, accurate near 0.
double entire_cosine_integral(double x);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

// Adaptive Gauss-Kronrod (61 point) on [a, b]. The interval is pre-split into
// `panels` equal pieces so oscillatory integrands get enough resolution.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, int panels = 1);

}  // namespace gravab
