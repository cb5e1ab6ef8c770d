#pragma once

// Brute-force check of the single-mode dynamics: the interferometer arm label
// times a truncated Fock ladder, evolved with a dense matrix exponential.
//
// Units are dimensionless (hbar = 1, energies are angular frequencies). The
// source mass is a classical label: its coupling enters both arms' drive.
// Basis index = arm * (N + 1) + n with arm 0 = upper, 1 = lower.

#include <Eigen/Dense>

#include "gravab/singlemode.hpp"

namespace gravab::oracle {

inline constexpr int kMaxTruncation = 512;

struct OracleParams {
  double omega = 1.0;
  double g_source = 0.0;
  double g_upper = 0.0;
  double g_lower = 0.0;
  Vec3 k{0.0, 0.0, 0.0};
  Vec3 r_source{0.0, 0.0, 0.0};
  Vec3 r_upper{0.0, 0.0, 0.0};
  Vec3 r_lower{0.0, 0.0, 0.0};
  // m c^2 / hbar and M c^2 / hbar in the oracle's frequency units.
  double rest_energy_atom = 0.0;
  double rest_energy_source = 0.0;

  // SI couplings from a geometry and a mode (speed of light taken from the
  // constants). The resulting couplings are tiny; useful for plumbing checks.
  static OracleParams from_geometry(const InterferometerGeometry& geom, const ModeParams& mode,
                                    const PhysicalConstants& constants = codata2018);

  ModeParams mode() const;  // dimensionless mode with c = 1
  double arm_coupling(Arm arm) const { return arm == Arm::upper ? g_upper : g_lower; }
  const Vec3& arm_position(Arm arm) const { return arm == Arm::upper ? r_upper : r_lower; }
  cplx arm_drive(Arm arm) const;
};

// Largest |alpha(t)|^2 over time and arms: 4 |drive|^2 / omega^2.
double max_displacement_sq(const OracleParams& params);

// Truncation needed by compare_with_analytic: n^2 + 10 n + 20 with n = max |alpha|.
int required_truncation(const OracleParams& params);

struct TruncatedState {
  Eigen::VectorXcd amplitudes;
  int truncation = 0;

  cplx at(Arm arm, int n) const;
  double norm() const { return amplitudes.norm(); }
};

// (|u> + |d>)/sqrt(2) times the field vacuum.
TruncatedState initial_state(int truncation);

struct OracleHamiltonian {
  Eigen::MatrixXcd matrix;
  OracleParams params;
  int truncation = 0;
};

// H = sum_arm |arm><arm| (x) [omega b^dag b - (drive b + conj(drive) b^dag) + E_atom + E_source],
// which displaces the vacuum to alpha = displacement_kernel * conj(drive).
// Throws Error(invalid_argument) for N < 1 or N > kMaxTruncation and
// Error(truncation_risk) when max_displacement_sq > N / 4.
OracleHamiltonian build_hamiltonian(const OracleParams& params, int truncation);

// exp(-i H t) |state>. Throws Error(numerical_instability) if the norm
// drifts by more than 1e-8.
TruncatedState evolve(const TruncatedState& state, const OracleHamiltonian& hamiltonian, double t);

struct ReducedDensityMatrix {
  Eigen::MatrixXcd entries;
  double trace() const { return entries.trace().real(); }
  double purity() const;
};

// Partial trace over the arm label, (N+1)x(N+1).
ReducedDensityMatrix reduced_field_state(const TruncatedState& state);

// Partial trace over the field, 2x2 with index 0 = upper, 1 = lower.
ReducedDensityMatrix reduced_atom_state(const TruncatedState& state);

// 1 - tr(rho^2)
double linear_entropy(const ReducedDensityMatrix& rho);

// Exact state from the displaced-oscillator solution, projected onto the
// same truncated basis. Includes the rest-energy global phase.
TruncatedState analytic_state(const OracleParams& params, double t, int truncation);

// <n|alpha> for n = 0..N.
Eigen::VectorXcd coherent_projection(cplx alpha, int truncation);

struct FidelityReport {
  int truncation = 0;
  int required_truncation = 0;
  double max_displacement = 0.0;  // max_t |alpha|
  double fidelity = 0.0;          // |<analytic|oracle>|
  double amplitude_error_upper = 0.0;
  double amplitude_error_lower = 0.0;
  double norm_error = 0.0;
  double entropy_field = 0.0;  // oracle, field side
  double entropy_atom = 0.0;   // oracle, atom side
  double entropy_analytic = 0.0;
  double entropy_discrepancy = 0.0;
  // arg(rho_atom[u][d]) - arg<alpha_d|alpha_u>, i.e. the measured phase difference
  double phase_difference_oracle = 0.0;
  double phase_difference_full = 0.0;    // analytic, (omega t - sin omega t) time factor
  double phase_difference_linear = 0.0;  // analytic, t/omega time factor
  cplx alpha_upper{};
  cplx alpha_lower{};

  double amplitude_error() const {
    return amplitude_error_upper > amplitude_error_lower ? amplitude_error_upper
                                                         : amplitude_error_lower;
  }
};

// Runs the oracle and the analytic solution side by side. Throws
// Error(truncation_risk) when N < required_truncation(params).
FidelityReport compare_with_analytic(const OracleParams& params, double t, int truncation);

}  // namespace gravab::oracle
