#include <doctest.h>

#include <cmath>

#include "gravab/constants.hpp"
#include "gravab/error.hpp"

using namespace gravab;

TEST_CASE("planck scale from codata constants") {
  const PlanckScale p = derive_planck_scale(codata2018);
  CHECK(p.planck_mass == doctest::Approx(2.1764343420511266686e-8).epsilon(1e-13));
  CHECK(p.planck_length == doctest::Approx(1.6162550239285500507e-35).epsilon(1e-13));
  CHECK(p.planck_wavenumber == doctest::Approx(6.187142407572229153e34).epsilon(1e-13));
  // rounded value used in the published estimate
  CHECK(std::abs(p.planck_mass - 2.2e-8) / 2.2e-8 < 0.02);
}

TEST_CASE("planck scale identities") {
  for (const PhysicalConstants& k :
       {codata2018, PhysicalConstants::make(1.0, 1.0, 1.0, 1.0),
        PhysicalConstants::make(3.7e-3, 2.5e-20, 1.1e5, 4.0)}) {
    const PlanckScale p = derive_planck_scale(k);
    CHECK(std::abs(p.planck_mass * p.planck_mass / (k.hbar * k.c / k.G) - 1.0) < 1e-12);
    CHECK(std::abs(p.planck_wavenumber * p.planck_length - 1.0) < 1e-12);
    CHECK(std::abs(p.planck_mass * k.c * k.c / (k.hbar * k.c * p.planck_wavenumber) - 1.0) < 1e-12);
  }
}

TEST_CASE("quadrupling G halves the planck mass") {
  const PhysicalConstants k = codata2018;
  const PhysicalConstants k4 = PhysicalConstants::make(4.0 * k.G, k.hbar, k.c, k.epsilon0);
  CHECK(derive_planck_scale(k4).planck_mass ==
        doctest::Approx(0.5 * derive_planck_scale(k).planck_mass).epsilon(1e-14));
}

TEST_CASE("constants must be positive and finite") {
  CHECK_THROWS_AS(PhysicalConstants::make(0.0, 1.0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(PhysicalConstants::make(1.0, -1.0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(PhysicalConstants::make(1.0, 1.0, INFINITY, 1.0), Error);
  CHECK_THROWS_AS(PhysicalConstants::make(1.0, 1.0, 1.0, NAN), Error);
}

TEST_CASE("mu0 from epsilon0 and c") {
  CHECK(codata2018.mu0() == doctest::Approx(1.25663706212e-6).epsilon(1e-10));
}

TEST_CASE("cutoff presets") {
  CHECK(cutoff_wavenumber(CutoffPreset::codata, codata2018) ==
        derive_planck_scale(codata2018).planck_wavenumber);
  CHECK(cutoff_wavenumber(CutoffPreset::paper_cutoff, codata2018) == 1e32);
  CHECK(cutoff_preset_from_string("codata") == CutoffPreset::codata);
  CHECK(cutoff_preset_from_string("paper-cutoff") == CutoffPreset::paper_cutoff);
  CHECK(std::string{to_string(CutoffPreset::paper_cutoff)} == "paper-cutoff");
  try {
    cutoff_preset_from_string("planck");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::config);
  }
}
