// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "generators.hpp"
#include "gravab/config.hpp"
#include "gravab/continuum.hpp"
#include "gravab/error.hpp"
#include "gravab/fock_oracle.hpp"
#include "gravab/runner.hpp"
#include "gravab/semiclassical.hpp"
#include "gravab/special_functions.hpp"

using namespace gravab;
using gravab::testing::Gen;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int cases = 0;
};

void require(Outcome& o, bool ok, const std::string& what) {
  ++o.cases;
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

InterferometerGeometry line(double du, double dd) {
  InterferometerGeometry g;
  g.upper_arm = Vec3{0.0, 0.0, du};
  g.lower_arm = Vec3{0.0, 0.0, dd};
  g.atom_mass = kRubidium87Mass;
  g.source_mass = 1250.0;
  g.interaction_time = 1.0;
  return g;
}

struct OracleDraw {
  oracle::OracleParams params;
  double t;
  oracle::FidelityReport report;
};

std::vector<OracleDraw> oracle_draws(int count) {
  Gen gen(20260101);
  std::vector<OracleDraw> out;
  for (int i = 0; i < count; ++i) {
    OracleDraw d{gen.weak_oracle(), gen.uniform(0.0, 10.0), {}};
    d.report = oracle::compare_with_analytic(d.params, d.t, oracle::required_truncation(d.params));
    out.push_back(d);
  }
  return out;
}

Outcome oracle_equivalence(const std::vector<OracleDraw>& draws) {
  Outcome o;
  double worst_fid = 0.0, worst_amp = 0.0, worst_alpha = 0.0;
  for (const auto& d : draws) {
    worst_alpha = std::max(worst_alpha, d.report.max_displacement);
    worst_fid = std::max(worst_fid, 1.0 - d.report.fidelity);
    worst_amp = std::max(worst_amp, d.report.amplitude_error());
    require(o, d.report.max_displacement <= 1.0, "draw outside weak coupling");
    require(o, d.report.fidelity >= 1.0 - 1e-8, fmt("fidelity %.3e below 1 - 1e-8", d.report.fidelity));
    require(o, d.report.amplitude_error() <= 1e-8, fmt("amplitude error %.3e", d.report.amplitude_error()));
  }
  if (o.pass) {
    o.detail = std::to_string(draws.size()) + " draws, max |alpha| " + fmt("%.3f", worst_alpha) +
               fmt(", worst 1-fidelity %.2e, worst amplitude error %.2e", worst_fid, worst_amp);
  }
  return o;
}

Outcome entropy_identity(const std::vector<OracleDraw>& draws) {
  Outcome o;
  double worst_closed = 0.0, worst_sides = 0.0;
  for (const auto& d : draws) {
    const double closed = 0.5 * (1.0 - std::exp(-std::norm(d.report.alpha_upper - d.report.alpha_lower)));
    const double e1 = std::abs(d.report.entropy_atom - closed);
    const double e2 = std::abs(d.report.entropy_field - d.report.entropy_atom);
    worst_closed = std::max(worst_closed, e1);
    worst_sides = std::max(worst_sides, e2);
    require(o, e1 <= 1e-8, fmt("entropy vs closed form %.3e", e1));
    require(o, e2 <= 1e-10, fmt("field vs atom entropy %.3e", e2));
  }
  if (o.pass) o.detail = fmt("worst |S - closed| %.2e, worst |S_field - S_atom| %.2e", worst_closed, worst_sides);
  return o;
}

Outcome phase_recovery() {
  Outcome o;
  Gen gen(20260102);
  std::vector<std::pair<InterferometerGeometry, ModeIntegralSpec>> cases;
  for (int i = 0; i < 20; ++i) cases.emplace_back(gen.geometry(), ModeIntegralSpec::with_cutoff(CutoffPreset::codata));
  // near the minimum cutoff product, where the oscillatory tail matters
  for (int i = 0; i < 20; ++i) {
    InterferometerGeometry g = gen.geometry();
    ArmDistances d = arm_distances(g);
    while (std::max(d.upper, d.lower) / std::min(d.upper, d.lower) < 1.25) {
      g = gen.geometry();
      d = arm_distances(g);
    }
    ModeIntegralSpec s;
    s.k_max = gen.uniform(1e3, 1e5) / std::min(d.upper, d.lower);
    cases.emplace_back(g, s);
  }
  double worst_num = 0.0, worst_sc = 0.0;
  for (const auto& [g, spec] : cases) {
    const double closed = ab_phase_closed_form(g);
    const double numeric = ab_phase_numeric(g, spec).phase;
    const double sc = ab_phase_semiclassical(g, PotentialModel::from_geometry(g));
    const double r1 = std::abs(numeric - closed) / std::abs(closed);
    const double r2 = std::abs(std::abs(sc) - std::abs(closed)) / std::abs(closed);
    worst_num = std::max(worst_num, r1);
    worst_sc = std::max(worst_sc, r2);
    require(o, r1 <= 1e-3, fmt("numeric vs closed relative %.3e", r1));
    require(o, r2 <= 1e-12, fmt("closed vs |semiclassical| relative %.3e", r2));
  }
  if (o.pass) {
    o.detail = std::to_string(cases.size()) + " geometries" +
               fmt(", worst numeric rel %.2e, worst semiclassical rel %.2e", worst_num, worst_sc);
  }
  return o;
}

Outcome entropy_asymptotics() {
  Outcome o;
  double worst = 0.0;
  for (double lambda : {1e6, 1e9, 1e12}) {
    const double f = entropy_kernel_integral(0.0, lambda, 1e-12).value;
    const double asym = std::log(lambda) + kEulerGamma - 1.0;
    const double rel = std::abs(f - asym) / asym;
    worst = std::max(worst, rel);
    require(o, rel <= 1e-6, fmt("F(%.0e) off asymptote by %.3e", lambda, rel));
  }
  // the closed tail against brute-force quadrature over the whole range
  const double direct =
      integrate([](double x) { return x < 1e-3 ? x / 6.0 : (x - std::sin(x)) / (x * x); }, 0.0, 1e4, 1e-13, 4000)
          .value;
  const double tail = entropy_kernel_integral(0.0, 1e4, 1e-12).value;
  const double rel = std::abs(direct - tail) / direct;
  require(o, rel <= 1e-9, fmt("tail vs direct quadrature at 1e4: %.3e", rel));
  if (o.pass) o.detail = fmt("worst asymptotic rel %.2e, tail vs direct %.2e", worst, rel);
  return o;
}

Outcome published_numbers() {
  Outcome o;
  cli::RunConfig c = cli::parse_config(cli::preset_document("overstreet"));
  c.cutoff_preset = CutoffPreset::paper_cutoff;
  const nlohmann::json e = cli::run_entropy(c);
  const double i_units = e.at("I_in_planck_mass_units").get<double>();
  require(o, i_units >= 1e3 && i_units <= 1e5, fmt("I = %.3e m^2/m_p^2 not within 10x of 1e4", i_units));

  const nlohmann::json& ref = e.at("reference_comparison");
  require(o, ref.at("published").at("linear_entropy").get<double>() == 1e-29, "quoted S_L missing");
  bool presets[2] = {false, false}, masses[2] = {false, false};
  for (const auto& row : ref.at("recomputed")) {
    const double i = row.at("I").get<double>();
    const double s = row.at("linear_entropy").get<double>();
    require(o, s == 0.5 * -std::expm1(-i), "S_L != (1 - e^-I)/2");
    presets[row.at("cutoff_preset") == "codata" ? 0 : 1] = true;
    const double m = row.at("atom_mass_kg").get<double>();
    if (m == kPublishedAtomMass) masses[0] = true;
    if (m == kRubidium87Mass) masses[1] = true;
  }
  require(o, presets[0] && presets[1] && masses[0] && masses[1], "reference matrix incomplete");
  if (o.pass) {
    o.detail = fmt("I = %.4g m^2/m_p^2 (published 1e4); S_L(Rb-87) = %.3g", i_units,
                   e.at("linear_entropy").get<double>());
  }
  return o;
}

Outcome scenario_logic() {
  Outcome o;
  cli::RunConfig c = cli::parse_config(cli::preset_document("overstreet"));
  const ArmDistances d = arm_distances(c.geometry);
  const double tu = d.upper / codata2018.c, td = d.lower / codata2018.c;

  c.scenario = ScenarioConfig{ScenarioKind::no_arm, 0.5 * std::min(tu, td)};
  const nlohmann::json none = cli::run_scenario(c).at("gated");
  for (const char* key : {"ab_phase_quantum_closed_rad", "ab_phase_quantum_numeric_rad", "I", "linear_entropy"}) {
    require(o, none.at(key).get<double>() == 0.0, std::string{"no-arm "} + key + " not zero");
  }

  c.scenario = ScenarioConfig{ScenarioKind::one_arm, 0.5 * (tu + td)};
  const nlohmann::json one = cli::run_scenario(c).at("gated");
  const auto& g = c.geometry;
  const double single = codata2018.G * g.source_mass * g.atom_mass * g.interaction_time /
                        (codata2018.hbar * std::min(d.upper, d.lower));
  const double closed = one.at("ab_phase_quantum_closed_rad").get<double>();
  const double numeric = one.at("ab_phase_quantum_numeric_rad").get<double>();
  require(o, std::abs(closed - single) <= 1e-14 * single, fmt("one-arm closed %.6e vs %.6e", closed, single));
  require(o, std::abs(numeric - single) <= 1e-9 * single, fmt("one-arm numeric %.6e vs %.6e", numeric, single));

  // monotone gating over closure times, on random geometries
  Gen gen(20260106);
  for (int i = 0; i < 50; ++i) {
    const InterferometerGeometry r = gen.geometry(0.1, 1e8);
    bool pu = false, pd = false;
    int prev_count = 0;
    for (int j = 0; j <= 60; ++j) {
      const double t = j == 0 ? 0.0 : 1e-11 * std::pow(10.0, 0.2 * j);
      const GatingReport rep = light_cone_contact(r, t);
      const int count = int(rep.upper_in_contact) + int(rep.lower_in_contact);
      require(o, (rep.upper_in_contact || !pu) && (rep.lower_in_contact || !pd) && count >= prev_count,
              "contact flag switched off as closure time grew");
      pu = rep.upper_in_contact;
      pd = rep.lower_in_contact;
      prev_count = count;
    }
  }
  if (o.pass) o.detail = fmt("one-arm phase %.6g rad = single-arm term; gating monotone", single);
  return o;
}

// Mode sum over k-shells with the single-mode couplings and V/(2 pi)^3 density.
double mode_sum_exponent(double r, double t, double k_max, double mass, double volume) {
  const double per_shell_density = volume / (8.0 * pi * pi * pi);
  auto integrand = [&](double k) {
    const ModeParams mode = ModeParams::from_wavevector(Vec3{0.0, 0.0, k}, 1.0, volume);
    const double g = coupling_constant(mass, mode);
    const double kernel_sq = std::norm(displacement_kernel(mode.omega, t));
    const double kr = k * r;
    const double angular = 8.0 * pi * (kr < 1e-4 ? kr * kr / 6.0 : 1.0 - std::sin(kr) / kr);
    return per_shell_density * k * k * g * g * kernel_sq * angular;
  };
  return integrate(integrand, 1e-12 * k_max, k_max, 1e-12, 400).value;
}

Outcome property_suites() {
  Outcome o;
  Gen gen(20260107);
  int unitarity = 0, density = 0, vis = 0, vind = 0, rot = 0;

  for (int i = 0; i < 250; ++i) {
    const oracle::OracleParams p = gen.weak_oracle();
    const int n = gen.integer(20, 48);
    const oracle::OracleHamiltonian h = oracle::build_hamiltonian(p, n);
    oracle::TruncatedState v;
    v.truncation = n;
    v.amplitudes = Eigen::VectorXcd(2 * (n + 1));
    for (int j = 0; j < v.amplitudes.size(); ++j) v.amplitudes(j) = cplx{gen.uniform(-1, 1), gen.uniform(-1, 1)};
    v.amplitudes.normalize();
    const double t = gen.uniform(0.0, 20.0);
    const oracle::TruncatedState w = oracle::evolve(v, h, t);
    require(o, std::abs(w.norm() - 1.0) <= 1e-10, fmt("unitarity drift %.3e", std::abs(w.norm() - 1.0)));
    ++unitarity;

    for (const auto& rho : {oracle::reduced_field_state(w), oracle::reduced_atom_state(w)}) {
      const double herm = (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries);
      require(o, herm <= 1e-12, fmt("density matrix not hermitian %.3e", herm));
      require(o, std::abs(rho.trace() - 1.0) <= 1e-10, fmt("trace %.15f", rho.trace()));
      require(o, es.eigenvalues().minCoeff() >= -1e-10, fmt("negative eigenvalue %.3e", es.eigenvalues().minCoeff()));
      ++density;
    }
  }

  for (int i = 0; i < 300; ++i) {
    InterferometerGeometry g = gen.geometry();
    ModeIntegralSpec spec = ModeIntegralSpec::with_cutoff(gen.integer(0, 1) ? CutoffPreset::codata : CutoffPreset::paper_cutoff);
    spec.time_factor = gen.integer(0, 1) ? EntropyTimeFactor::exact : EntropyTimeFactor::unity;
    // heavier atoms push I to order one, where the identity is not trivial
    g.atom_mass = gen.log_uniform(1e-26, 3e-9);
    const PhaseEntropyReport r = evaluate_report(g, spec);
    const double lhs = r.visibility * r.visibility;
    const double rhs = 1.0 - 2.0 * r.linear_entropy;
    require(o, std::abs(lhs - rhs) <= 1e-12, fmt("visibility^2 %.15g vs 1 - 2 S_L %.15g", lhs, rhs));
    ++vis;

    const Eigen::Matrix3d rmat = gen.rotation();
    const PhaseEntropyReport q = evaluate_report(gen.rotated(g, rmat, gen.vec(10.0)), spec);
    const double dphi = std::abs(q.ab_phase_quantum - r.ab_phase_quantum) / std::max(1e-300, std::abs(r.ab_phase_closed));
    const double di = std::abs(q.I_integral - r.I_integral) / std::max(1e-300, r.I_integral);
    require(o, dphi <= 1e-9, fmt("rotation changed the phase by %.3e", dphi));
    require(o, di <= 1e-9, fmt("rotation changed I by %.3e", di));
    require(o, std::abs(q.semiclassical_phase - r.semiclassical_phase) <= 1e-9 * std::abs(r.semiclassical_phase),
            "rotation changed the semiclassical phase");
    ++rot;

    const double v1 = gen.log_uniform(1e-6, 1e6);
    const double v2 = gen.log_uniform(1e-6, 1e6);
    const double p1 = ab_phase_numeric(g, spec, codata2018, {}, v1).phase;
    const double p2 = ab_phase_numeric(g, spec, codata2018, {}, v2).phase;
    require(o, std::abs(p1 - p2) <= 1e-12 * std::abs(p1), fmt("phase changed with V by %.3e", std::abs(p1 - p2)));
    ++vind;
  }

  // entropy: the discrete mode sum at two volumes against the continuum integral
  for (int i = 0; i < 60; ++i) {
    const double r = gen.uniform(0.2, 2.0);
    const double tau = gen.uniform(0.3, 4.0);
    const double lambda = gen.uniform(50.0, 300.0);
    const double t = tau * r / codata2018.c;
    const double k_max = lambda / r;
    const double mass = gen.log_uniform(1e-27, 1e-24);
    const double s1 = mode_sum_exponent(r, t, k_max, mass, gen.log_uniform(1e-6, 1.0));
    const double s2 = mode_sum_exponent(r, t, k_max, mass, gen.log_uniform(1.0, 1e6));
    ModeIntegralSpec spec;
    spec.k_max = k_max;
    spec.time_factor = EntropyTimeFactor::exact;
    spec.rel_tol = 1e-12;
    const double box = entropy_integral(r, spec, t, mass).box_normalized;
    require(o, std::abs(s1 - s2) <= 1e-10 * s1, fmt("mode sum changed with V by %.3e", std::abs(s1 - s2) / s1));
    require(o, std::abs(s1 - box) <= 1e-8 * box, fmt("mode sum %.10e vs box-normalized %.10e", s1, box));
    ++vind;
  }

  const int total = unitarity + density + vis + vind + rot;
  require(o, total >= 1000, "fewer than 1000 property cases");
  if (o.pass) {
    o.detail = std::to_string(total) + " cases (unitarity " + std::to_string(unitarity) + ", density " +
               std::to_string(density) + ", visibility " + std::to_string(vis) + ", volume " +
               std::to_string(vind) + ", rotation " + std::to_string(rot) + ")";
  }
  return o;
}

bool report(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string{"exception: "} + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0.0 && secs > limit_s) {
    o.detail += fmt(" [runtime %.1f s over %.0f s limit]", secs, limit_s);
    o.pass = false;
  }
  std::printf("[%s] %d %-26s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main() {
  bool ok = true;
  std::vector<OracleDraw> draws;
  ok &= report(1, "oracle equivalence", 60.0, [&] {
    draws = oracle_draws(120);
    return oracle_equivalence(draws);
  });
  ok &= report(2, "entropy identity", 0.0, [&] { return entropy_identity(draws); });
  ok &= report(3, "AB phase recovery", 30.0, phase_recovery);
  ok &= report(4, "entropy asymptotics", 0.0, entropy_asymptotics);
  ok &= report(5, "published numbers", 0.0, published_numbers);
  ok &= report(6, "scenario logic", 0.0, scenario_logic);
  ok &= report(7, "property suites", 120.0, property_suites);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
