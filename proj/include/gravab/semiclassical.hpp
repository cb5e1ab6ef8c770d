#pragma once

// Reference phases from classical potentials: the gravitational action phase
// of a static two-arm interferometer and the electromagnetic AB phases of a
// solenoid.

#include "gravab/constants.hpp"
#include "gravab/geometry.hpp"

namespace gravab {

// V(x) = -G M / |x - r_s|, potential energy per unit test mass.
struct PotentialModel {
  double source_mass = 0.0;  // kg
  Vec3 source_position{0.0, 0.0, 0.0};

  static PotentialModel from_geometry(const InterferometerGeometry& geom);

  double potential(const Vec3& x, const PhysicalConstants& constants = codata2018) const;
  Vec3 gradient(const Vec3& x, const PhysicalConstants& constants = codata2018) const;
};

struct ActionPhaseTerms {
  double potential = 0.0;  // (m/hbar) t [V(x_u) - V(x_d)]
  double gradient = 0.0;   // -(m/hbar) t (dx/2) [dV/dx(x_u) + dV/dx(x_d)]
  double total() const { return potential + gradient; }
};

// Derivatives are projected on the unit vector from r_d to r_u and dx = |r_u - r_d|.
// Arm weights gate each arm's potential and slope contributions.
ActionPhaseTerms action_phase_terms(const InterferometerGeometry& geom,
                                    const PotentialModel& potential,
                                    const PhysicalConstants& constants = codata2018,
                                    const ArmWeights& weights = {});

double action_phase(const InterferometerGeometry& geom, const PotentialModel& potential,
                    const PhysicalConstants& constants = codata2018);

// (m/hbar) t [V(x_u) - V(x_d)] = G M m t / hbar (1/d_d - 1/d_u)
double ab_phase_semiclassical(const InterferometerGeometry& geom, const PotentialModel& potential,
                              const PhysicalConstants& constants = codata2018);

// Finite thick-walled solenoid carrying an azimuthal volume current density
// j in the shell inner_radius <= rho <= inner_radius + wall_thickness,
// |z - centre| <= length / 2 along `axis`.
struct SolenoidModel {
  Vec3 center{0.0, 0.0, 0.0};
  Vec3 axis{0.0, 0.0, 1.0};
  double inner_radius = 1.0;    // m
  double wall_thickness = 0.1;  // m
  double length = 1.0;          // m
  double current_density = 0.0; // A/m^2, positive = counter-clockwise about axis

  void validate() const;

  double outer_radius() const { return inner_radius + wall_thickness; }
  double surface_current() const { return current_density * wall_thickness; }

  // Axial field of the infinitely long shell at cylindrical radius rho.
  double ideal_field(double rho, const PhysicalConstants& constants = codata2018) const;

  // Flux of ideal_field through a disk enclosing the whole shell.
  double flux(const PhysicalConstants& constants = codata2018) const;
};

// q * flux / hbar for a loop encircling the solenoid once.
double em_flux_phase(double charge, const SolenoidModel& solenoid,
                     const PhysicalConstants& constants = codata2018);

// (2 t q / (m hbar eps0 c^2)) int p . j(x) / |r_c - x| d^3x over the shell.
// The axial integral is done in closed form; the radial and azimuthal ones by
// quadrature. Throws Error(singular_integrand) for r_c inside the shell.
double em_local_ab_phase(double charge, const Vec3& momentum, double particle_mass, double t,
                         const Vec3& particle_position, const SolenoidModel& solenoid,
                         const PhysicalConstants& constants = codata2018,
                         double rel_tol = 1e-10);

// The volume integral alone, int p . j(x)/|r_c - x| d^3x (units A kg / s).
double em_current_overlap_integral(const Vec3& momentum, const Vec3& particle_position,
                                   const SolenoidModel& solenoid, double rel_tol = 1e-10);

}  // namespace gravab
