#include <doctest.h>

#include "beamforge/convert.hpp"
#include "beamforge/errors.hpp"
#include "support.hpp"

using namespace beamforge;

TEST_CASE("unloaded beam") {
  PhysicalParams ph;
  ph.h = 0.1;
  ph.kappa_core = 0.05;
  ph.D_axial = 0.0;
  CHECK(dimensionless_params(ph).params.beta == 0.0);
}

TEST_CASE("compressed beam") {
  PhysicalParams ph;
  ph.ell = 1.0;
  ph.h = 0.1;
  ph.D_axial = -0.05;
  ph.kappa_core = 0.05;
  const auto r = dimensionless_params(ph);
  CHECK(ref::rel_close(r.diagnostics.delta, 1.0 / 600.0, 1e-15));
  CHECK(ref::rel_close(r.diagnostics.chi, -0.1, 1e-15));
  CHECK(ref::rel_close(r.params.beta, -60.0, 1e-13));
  CHECK(ref::rel_close(r.params.varrho, 600.0, 1e-13));
  CHECK(ref::rel_close(r.params.varrho * r.diagnostics.delta, 1.0, 1e-15));
  CHECK(ref::rel_close(r.params.beta * r.diagnostics.delta, r.diagnostics.chi, 1e-15));
  CHECK(ref::rel_close(r.params.k * r.diagnostics.delta, r.diagnostics.kappa, 1e-15));
  CHECK(r.diagnostics.slenderness == doctest::Approx(0.1));
  CHECK_FALSE(r.diagnostics.tau0.has_value());
}

TEST_CASE("core stiffness") {
  PhysicalParams ph;
  ph.ell = 1.0;
  ph.h = 0.1;
  ph.nu_poisson = 0.0;
  ph.E_mod = 1.0;
  ph.omega_area = 1.0;
  ph.kappa_core = 0.05;
  ph.rho_density = 2.0;
  const auto r = dimensionless_params(ph);
  CHECK(ref::rel_close(r.diagnostics.kappa, 1.0, 1e-14));
  CHECK(ref::rel_close(r.params.k, 600.0, 1e-13));
  REQUIRE(r.diagnostics.tau0.has_value());
  CHECK(ref::rel_close(*r.diagnostics.tau0, 2.0, 1e-15));
}

TEST_CASE("magnitude warnings") {
  PhysicalParams ph;
  ph.h = 0.01;
  ph.kappa_core = 1.0;
  ph.D_axial = -0.5;
  CHECK_FALSE(dimensionless_params(ph).diagnostics.warnings.empty());
}

TEST_CASE("invalid physical data") {
  PhysicalParams ph;
  ph.kappa_core = 1.0;
  ph.h = 2.0;
  CHECK_THROWS_AS(dimensionless_params(ph), ValidationError);
  ph.h = 0.01;
  ph.nu_poisson = 0.5;
  CHECK_THROWS_AS(dimensionless_params(ph), ValidationError);
  ph.nu_poisson = 0.3;
  ph.kappa_core = 0.0;
  CHECK_THROWS_AS(dimensionless_params(ph), ValidationError);
}
