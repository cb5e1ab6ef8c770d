#include "gravab/semiclassical.hpp"

#include <cmath>
#include <numbers>

#include "gravab/error.hpp"
#include "gravab/special_functions.hpp"

namespace gravab {

namespace {

constexpr double kPi = std::numbers::pi;

// int_{z1}^{z2} dz / sqrt(h^2 + z^2), written to avoid cancellation.
double inverse_distance_line(double h, double z1, double z2) {
  auto up = [h](double z) { return z + std::hypot(z, h); };
  if (z1 >= 0.0) return std::log(up(z2) / up(z1));
  if (z2 <= 0.0) return std::log(up(-z1) / up(-z2));
  return std::asinh(z2 / h) - std::asinh(z1 / h);
}

}  // namespace

PotentialModel PotentialModel::from_geometry(const InterferometerGeometry& geom) {
  return PotentialModel{geom.source_mass, geom.source};
}

double PotentialModel::potential(const Vec3& x, const PhysicalConstants& k) const {
  return -k.G * source_mass / (x - source_position).norm();
}

Vec3 PotentialModel::gradient(const Vec3& x, const PhysicalConstants& k) const {
  const Vec3 d = x - source_position;
  const double r = d.norm();
  return k.G * source_mass / (r * r * r) * d;
}

ActionPhaseTerms action_phase_terms(const InterferometerGeometry& geom,
                                    const PotentialModel& potential,
                                    const PhysicalConstants& k, const ArmWeights& w) {
  geom.validate();
  const double scale = geom.atom_mass * geom.interaction_time / k.hbar;
  ActionPhaseTerms terms;
  terms.potential =
      scale * (w.upper * potential.potential(geom.upper_arm, k) -
               w.lower * potential.potential(geom.lower_arm, k));
  const Vec3 sep = geom.upper_arm - geom.lower_arm;
  const double dx = sep.norm();
  if (dx > 0.0) {
    const Vec3 e = sep / dx;
    const double slope_sum =
        w.upper * potential.gradient(geom.upper_arm, k).dot(e) +
        w.lower * potential.gradient(geom.lower_arm, k).dot(e);
    terms.gradient = -scale * 0.5 * dx * slope_sum;
  }
  return terms;
}

double action_phase(const InterferometerGeometry& geom, const PotentialModel& potential,
                    const PhysicalConstants& k) {
  return action_phase_terms(geom, potential, k).total();
}

double ab_phase_semiclassical(const InterferometerGeometry& geom, const PotentialModel& potential,
                              const PhysicalConstants& k) {
  return action_phase_terms(geom, potential, k).potential;
}

void SolenoidModel::validate() const {
  if (!(inner_radius > 0.0) || !(wall_thickness > 0.0) || !(length > 0.0)) {
    throw Error(ErrorKind::invalid_argument,
                "solenoid radius, wall thickness and length must be positive");
  }
  if (!center.allFinite() || !axis.allFinite() || axis.norm() == 0.0 ||
      !std::isfinite(current_density)) {
    throw Error(ErrorKind::invalid_argument, "solenoid needs a finite centre, axis and current");
  }
}

double SolenoidModel::ideal_field(double rho, const PhysicalConstants& k) const {
  const double b = outer_radius();
  if (rho >= b) return 0.0;
  return k.mu0() * current_density * (b - std::max(rho, inner_radius));
}

double SolenoidModel::flux(const PhysicalConstants& k) const {
  const double a = inner_radius;
  const double b = outer_radius();
  const double shell = 2.0 * kPi * (b * (b * b - a * a) / 2.0 - (b * b * b - a * a * a) / 3.0);
  return k.mu0() * current_density * (wall_thickness * kPi * a * a + shell);
}

double em_flux_phase(double charge, const SolenoidModel& solenoid, const PhysicalConstants& k) {
  solenoid.validate();
  return charge * solenoid.flux(k) / k.hbar;
}

double em_current_overlap_integral(const Vec3& momentum, const Vec3& particle_position,
                                   const SolenoidModel& s, double rel_tol) {
  s.validate();
  const Vec3 ez = s.axis.normalized();
  const Vec3 seed = std::abs(ez.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 ex = (seed - seed.dot(ez) * ez).normalized();
  const Vec3 ey = ez.cross(ex);

  const Vec3 q = particle_position - s.center;
  const double z_c = q.dot(ez);
  const double rho_c = std::hypot(q.dot(ex), q.dot(ey));
  const double phi_c = std::atan2(q.dot(ey), q.dot(ex));
  const double a = s.inner_radius;
  const double b = s.outer_radius();
  const double half = 0.5 * s.length;
  if (rho_c >= a && rho_c <= b && std::abs(z_c) <= half) {
    throw Error(ErrorKind::singular_integrand,
                "particle position lies inside the solenoid current shell");
  }

  const double px = momentum.dot(ex);
  const double py = momentum.dot(ey);
  const double z1 = -half - z_c;
  const double z2 = half - z_c;

  // Azimuth measured from the particle's own azimuth so the near-field peak
  // sits on a panel boundary.
  auto azimuthal = [&](double rho) {
    auto f = [&](double dphi) {
      const double phi = phi_c + dphi;
      const double p_dot_phihat = -px * std::sin(phi) + py * std::cos(phi);
      const double h2 = rho * rho + rho_c * rho_c - 2.0 * rho * rho_c * std::cos(dphi);
      return p_dot_phihat * inverse_distance_line(std::sqrt(std::max(h2, 0.0)), z1, z2);
    };
    return integrate(f, -kPi, 0.0, rel_tol).value + integrate(f, 0.0, kPi, rel_tol).value;
  };
  const double radial = integrate([&](double rho) { return rho * azimuthal(rho); }, a, b, rel_tol).value;
  return s.current_density * radial;
}

double em_local_ab_phase(double charge, const Vec3& momentum, double particle_mass, double t,
                         const Vec3& particle_position, const SolenoidModel& solenoid,
                         const PhysicalConstants& k, double rel_tol) {
  if (!(particle_mass > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "particle mass must be positive");
  }
  const double integral = em_current_overlap_integral(momentum, particle_position, solenoid, rel_tol);
  return 2.0 * t * charge / (particle_mass * k.hbar * k.epsilon0 * k.c * k.c) * integral;
}

}  // namespace gravab
