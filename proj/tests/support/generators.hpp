#pragma once

// Seeded random inputs for property tests.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Geometry>

#include "gravab/fock_oracle.hpp"
#include "gravab/geometry.hpp"

namespace gravab::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Vec3 vec(double scale) { return Vec3{uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }

  Vec3 unit() {
    std::normal_distribution<double> n;
    Vec3 v{n(engine_), n(engine_), n(engine_)};
    while (v.norm() < 1e-6) v = Vec3{n(engine_), n(engine_), n(engine_)};
    return v.normalized();
  }

  Eigen::Matrix3d rotation() {
    return Eigen::AngleAxisd(uniform(0.0, 2.0 * std::numbers::pi), unit()).toRotationMatrix();
  }

  // Lab-scale geometry with arm distances in [d_lo, d_hi] metres.
  InterferometerGeometry geometry(double d_lo = 0.05, double d_hi = 2.0) {
    InterferometerGeometry g;
    g.source = vec(1.0);
    g.upper_arm = g.source + uniform(d_lo, d_hi) * unit();
    g.lower_arm = g.source + uniform(d_lo, d_hi) * unit();
    while ((g.upper_arm - g.lower_arm).norm() < 1e-3) g.lower_arm = g.source + uniform(d_lo, d_hi) * unit();
    g.atom_mass = log_uniform(1e-27, 1e-24);
    g.source_mass = log_uniform(1.0, 1e4);
    g.interaction_time = uniform(0.1, 3.0);
    return g;
  }

  // Weak coupling: |drive| <= omega / 2, so max |alpha| <= 1.
  oracle::OracleParams weak_oracle() {
    oracle::OracleParams p;
    p.omega = uniform(0.5, 2.0);
    const double g = p.omega / 4.0;
    p.g_source = uniform(-g, g);
    p.g_upper = uniform(-g, g);
    p.g_lower = uniform(-g, g);
    p.k = p.omega * unit();
    p.r_source = vec(3.0);
    p.r_upper = vec(3.0);
    p.r_lower = vec(3.0);
    p.rest_energy_atom = uniform(0.0, 5.0);
    p.rest_energy_source = uniform(0.0, 5.0);
    return p;
  }

  InterferometerGeometry rotated(const InterferometerGeometry& g, const Eigen::Matrix3d& r, const Vec3& shift) {
    InterferometerGeometry out = g;
    out.source = r * g.source + shift;
    out.upper_arm = r * g.upper_arm + shift;
    out.lower_arm = r * g.lower_arm + shift;
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gravab::testing
