#include "gravab/special_functions.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_expint.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "gravab/error.hpp"

namespace gravab {

namespace {

// GSL's default handler aborts the process; errors are reported through the
// _e return codes instead.
const bool gsl_handler_disabled = [] {
  gsl_set_error_handler_off();
  return true;
}();

// Above this GSL's Ci loses its argument reduction; the auxiliary-function
// asymptotics are accurate to ~1e-21 relative here.
constexpr double kAsymptoticThreshold = 1e4;

// f(x), g(x) with Ci = f sin - g cos and Si = pi/2 - f cos - g sin.
void auxiliary(double x, double& f, double& g) {
  const double y = 1.0 / (x * x);
  f = (1.0 - y * (2.0 - y * (24.0 - y * 720.0))) / x;
  g = y * (1.0 - y * (6.0 - y * (120.0 - y * 5040.0)));
}

double checked(int status, const gsl_sf_result& r, const char* what) {
  if (status != GSL_SUCCESS) {
    throw Error(ErrorKind::numerical_instability,
                std::string{what} + ": " + gsl_strerror(status));
  }
  return r.val;
}

}  // namespace

double cosine_integral(double x) {
  (void)gsl_handler_disabled;
  if (!(x > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "Ci(x) requires x > 0");
  }
  if (x > kAsymptoticThreshold) {
    double f, g;
    auxiliary(x, f, g);
    return f * std::sin(x) - g * std::cos(x);
  }
  gsl_sf_result r;
  return checked(gsl_sf_Ci_e(x, &r), r, "Ci");
}

double sine_integral(double x) {
  (void)gsl_handler_disabled;
  if (std::abs(x) > kAsymptoticThreshold) {
    double f, g;
    const double ax = std::abs(x);
    auxiliary(ax, f, g);
    const double si = 0.5 * std::numbers::pi - f * std::cos(ax) - g * std::sin(ax);
    return x < 0.0 ? -si : si;
  }
  gsl_sf_result r;
  return checked(gsl_sf_Si_e(x, &r), r, "Si");
}

double entire_cosine_integral(double x) {
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  if (ax < 0.5) {
    // sum_{k>=1} (-1)^{k+1} x^{2k} / (2k (2k)!)
    const double x2 = ax * ax;
    double term = 1.0;  // x^{2k}/(2k)!
    double sum = 0.0;
    for (int k = 1; k <= 12; ++k) {
      term *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
      const double contrib = term / (2.0 * k);
      sum += (k % 2 == 1) ? contrib : -contrib;
    }
    return sum;
  }
  return kEulerGamma + std::log(ax) - cosine_integral(ax);
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, int panels) {
  using boost::math::quadrature::gauss_kronrod;
  QuadratureResult out;
  if (b == a) return out;
  if (panels < 1) panels = 1;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == panels) ? b : a + (i + 1) * h;
    // Boost's error floor is not scaled by the interval width, so short
    // panels would never converge; integrate over a unit interval instead.
    const double w = hi - lo;
    auto unit = [&](double u) { return w * f(lo + u * w); };
    double err = 0.0;
    out.value += gauss_kronrod<double, 61>::integrate(unit, 0.0, 1.0, 20, rel_tol, &err);
    out.error += err;
  }
  return out;
}

}  // namespace gravab
