#include "gravab/fock_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gravab/error.hpp"
#include "gravab/matrix_exponential.hpp"

namespace gravab::oracle {

namespace {

constexpr Arm kArms[] = {Arm::upper, Arm::lower};

int arm_index(Arm arm) { return arm == Arm::upper ? 0 : 1; }

double wrap_phase(double phi) { return std::remainder(phi, 2.0 * std::numbers::pi); }

}  // namespace

OracleParams OracleParams::from_geometry(const InterferometerGeometry& geom,
                                         const ModeParams& mode,
                                         const PhysicalConstants& constants) {
  OracleParams p;
  p.omega = mode.omega;
  p.g_source = coupling_constant(geom.source_mass, mode, constants);
  p.g_upper = coupling_constant(geom.atom_mass, mode, constants);
  p.g_lower = p.g_upper;
  p.k = mode.k;
  p.r_source = geom.source;
  p.r_upper = geom.upper_arm;
  p.r_lower = geom.lower_arm;
  const double c2 = constants.c * constants.c;
  p.rest_energy_atom = geom.atom_mass * c2 / constants.hbar;
  p.rest_energy_source = geom.source_mass * c2 / constants.hbar;
  return p;
}

ModeParams OracleParams::mode() const { return ModeParams{k, omega, 1.0, 1.0}; }

cplx OracleParams::arm_drive(Arm arm) const {
  return drive(g_source, arm_coupling(arm), mode(), r_source, arm_position(arm));
}

double max_displacement_sq(const OracleParams& params) {
  if (params.omega == 0.0) {
    throw Error(ErrorKind::singular_mode, "oracle requires omega > 0");
  }
  double worst = 0.0;
  for (Arm arm : kArms) {
    worst = std::max(worst, 4.0 * std::norm(params.arm_drive(arm)) / (params.omega * params.omega));
  }
  return worst;
}

int required_truncation(const OracleParams& params) {
  const double a2 = max_displacement_sq(params);
  return static_cast<int>(std::ceil(a2 + 10.0 * std::sqrt(a2) + 20.0));
}

cplx TruncatedState::at(Arm arm, int n) const {
  return amplitudes(arm_index(arm) * (truncation + 1) + n);
}

TruncatedState initial_state(int truncation) {
  if (truncation < 1 || truncation > kMaxTruncation) {
    throw Error(ErrorKind::invalid_argument, "truncation must be in [1, 512]");
  }
  TruncatedState s;
  s.truncation = truncation;
  s.amplitudes = Eigen::VectorXcd::Zero(2 * (truncation + 1));
  s.amplitudes(0) = s.amplitudes(truncation + 1) = 1.0 / std::sqrt(2.0);
  return s;
}

OracleHamiltonian build_hamiltonian(const OracleParams& params, int truncation) {
  if (truncation < 1 || truncation > kMaxTruncation) {
    throw Error(ErrorKind::invalid_argument, "truncation must be in [1, 512]");
  }
  const double a2 = max_displacement_sq(params);
  if (a2 > truncation / 4.0) {
    throw Error(ErrorKind::truncation_risk,
                "truncation N = " + std::to_string(truncation) +
                    " too small: predicted max |alpha|^2 = " + std::to_string(a2) +
                    " exceeds N/4; increase N");
  }
  const int levels = truncation + 1;
  OracleHamiltonian h;
  h.params = params;
  h.truncation = truncation;
  h.matrix = Eigen::MatrixXcd::Zero(2 * levels, 2 * levels);
  const double rest = params.rest_energy_atom + params.rest_energy_source;
  for (Arm arm : kArms) {
    const int off = arm_index(arm) * levels;
    const cplx beta = params.arm_drive(arm);
    for (int n = 0; n < levels; ++n) {
      h.matrix(off + n, off + n) = params.omega * n + rest;
      if (n > 0) {
        const double root = std::sqrt(static_cast<double>(n));
        h.matrix(off + n - 1, off + n) = -beta * root;            // beta b
        h.matrix(off + n, off + n - 1) = -std::conj(beta) * root;  // conj(beta) b^dag
      }
    }
  }
  return h;
}

TruncatedState evolve(const TruncatedState& state, const OracleHamiltonian& hamiltonian,
                      double t) {
  if (state.truncation != hamiltonian.truncation) {
    throw Error(ErrorKind::invalid_argument, "state and Hamiltonian truncations differ");
  }
  const double before = state.norm();
  if (std::abs(before - 1.0) > 1e-10) {
    throw Error(ErrorKind::invalid_argument, "evolve expects a normalized state");
  }
  const Eigen::MatrixXcd u = matrix_exponential(cplx{0.0, -t} * hamiltonian.matrix);
  TruncatedState out{u * state.amplitudes, state.truncation};
  const double drift = std::abs(out.norm() - before);
  if (drift > 1e-8) {
    throw Error(ErrorKind::numerical_instability,
                "norm drift " + std::to_string(drift) +
                    " after evolution; use a larger truncation or a shorter time step");
  }
  return out;
}

double ReducedDensityMatrix::purity() const { return entries.cwiseAbs2().sum(); }

ReducedDensityMatrix reduced_field_state(const TruncatedState& state) {
  const int levels = state.truncation + 1;
  ReducedDensityMatrix rho;
  rho.entries = Eigen::MatrixXcd::Zero(levels, levels);
  for (int a = 0; a < 2; ++a) {
    const auto v = state.amplitudes.segment(a * levels, levels);
    rho.entries += v * v.adjoint();
  }
  return rho;
}

ReducedDensityMatrix reduced_atom_state(const TruncatedState& state) {
  const int levels = state.truncation + 1;
  ReducedDensityMatrix rho;
  rho.entries = Eigen::MatrixXcd::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      rho.entries(i, j) = state.amplitudes.segment(j * levels, levels)
                              .dot(state.amplitudes.segment(i * levels, levels));
    }
  }
  return rho;
}

double linear_entropy(const ReducedDensityMatrix& rho) { return 1.0 - rho.purity(); }

Eigen::VectorXcd coherent_projection(cplx alpha, int truncation) {
  Eigen::VectorXcd c(truncation + 1);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= truncation; ++n) {
    c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  }
  return c;
}

TruncatedState analytic_state(const OracleParams& params, double t, int truncation) {
  const int levels = truncation + 1;
  const ModeParams mode = params.mode();
  const double rest = params.rest_energy_atom + params.rest_energy_source;
  TruncatedState s;
  s.truncation = truncation;
  s.amplitudes.resize(2 * levels);
  for (Arm arm : kArms) {
    const CoherentAmplitude alpha =
        coherent_amplitude(params.g_source, params.arm_coupling(arm), mode, params.r_source,
                           params.arm_position(arm), t, AmplitudeConvention::hamiltonian);
    const double phase = dynamical_phase(params.g_source, params.arm_coupling(arm), mode,
                                         params.r_source, params.arm_position(arm), t,
                                         TimeFactor::full) -
                         rest * t;
    s.amplitudes.segment(arm_index(arm) * levels, levels) =
        std::polar(1.0 / std::sqrt(2.0), phase) * coherent_projection(alpha.value, truncation);
  }
  return s;
}

FidelityReport compare_with_analytic(const OracleParams& params, double t, int truncation) {
  FidelityReport r;
  r.truncation = truncation;
  r.required_truncation = required_truncation(params);
  r.max_displacement = std::sqrt(max_displacement_sq(params));
  if (truncation < r.required_truncation) {
    throw Error(ErrorKind::truncation_risk,
                "truncation N = " + std::to_string(truncation) + " below required " +
                    std::to_string(r.required_truncation) + " for max |alpha| = " +
                    std::to_string(r.max_displacement));
  }

  const OracleHamiltonian h = build_hamiltonian(params, truncation);
  const TruncatedState oracle = evolve(initial_state(truncation), h, t);
  const TruncatedState exact = analytic_state(params, t, truncation);
  const int levels = truncation + 1;

  r.fidelity = std::abs(exact.amplitudes.dot(oracle.amplitudes));
  r.norm_error = std::abs(oracle.norm() - 1.0);
  r.amplitude_error_upper =
      (oracle.amplitudes.head(levels) - exact.amplitudes.head(levels)).cwiseAbs().maxCoeff();
  r.amplitude_error_lower =
      (oracle.amplitudes.tail(levels) - exact.amplitudes.tail(levels)).cwiseAbs().maxCoeff();

  const ModeParams mode = params.mode();
  const CoherentAmplitude au =
      coherent_amplitude(params.g_source, params.g_upper, mode, params.r_source, params.r_upper,
                         t, AmplitudeConvention::hamiltonian);
  const CoherentAmplitude ad =
      coherent_amplitude(params.g_source, params.g_lower, mode, params.r_source, params.r_lower,
                         t, AmplitudeConvention::hamiltonian);
  r.alpha_upper = au.value;
  r.alpha_lower = ad.value;

  const ReducedDensityMatrix rho_field = reduced_field_state(oracle);
  const ReducedDensityMatrix rho_atom = reduced_atom_state(oracle);
  r.entropy_field = linear_entropy(rho_field);
  r.entropy_atom = linear_entropy(rho_atom);
  r.entropy_analytic = 0.5 * (1.0 - std::exp(-std::norm(au.value - ad.value)));
  r.entropy_discrepancy = std::abs(r.entropy_field - r.entropy_analytic);

  const cplx coherence = rho_atom.entries(0, 1);
  r.phase_difference_oracle = wrap_phase(std::arg(coherence) - std::arg(overlap(ad, au)));
  const auto phase = [&](Arm arm, TimeFactor tf) {
    return dynamical_phase(params.g_source, params.arm_coupling(arm), mode, params.r_source,
                           params.arm_position(arm), t, tf);
  };
  r.phase_difference_full = phase(Arm::upper, TimeFactor::full) - phase(Arm::lower, TimeFactor::full);
  r.phase_difference_linear =
      phase(Arm::upper, TimeFactor::linear) - phase(Arm::lower, TimeFactor::linear);
  return r;
}

}  // namespace gravab::oracle
