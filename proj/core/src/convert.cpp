#include "beamforge/convert.hpp"

#include <cmath>
#include <sstream>

#include "beamforge/errors.hpp"

namespace beamforge {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(std::string("physical params: ") + what);
}

// One decade either side of the slenderness counts as "the same order".
void check_order(const char* name, double value, double slenderness,
                 std::vector<std::string>& warnings) {
  if (value == 0.0) return;
  const double ratio = std::abs(value) / slenderness;
  if (ratio < 0.1 || ratio > 10.0) {
    std::ostringstream msg;
    msg << "|" << name << "| = " << std::abs(value) << " is not of the order of h/ell = "
        << slenderness << "; the thin-beam regime may not apply";
    warnings.push_back(msg.str());
  }
}

}  // namespace

void PhysicalParams::validate() const {
  require(std::isfinite(ell) && ell > 0.0, "ell must be > 0");
  require(std::isfinite(h) && h > 0.0 && h < ell, "need 0 < h < ell");
  require(std::isfinite(E_mod) && E_mod > 0.0, "E must be > 0");
  require(std::isfinite(nu_poisson) && nu_poisson > -1.0 && nu_poisson < 0.5,
          "Poisson ratio must lie in (-1, 1/2)");
  require(std::isfinite(D_axial), "D must be finite");
  require(std::isfinite(kappa_core) && kappa_core > 0.0, "core stiffness must be > 0");
  require(std::isfinite(omega_area) && omega_area > 0.0, "cross-section area must be > 0");
  if (rho_density) require(std::isfinite(*rho_density) && *rho_density > 0.0, "rho must be > 0");
}

ConversionResult dimensionless_params(const PhysicalParams& phys) {
  phys.validate();
  ConversionResult out;
  auto& d = out.diagnostics;
  d.delta = phys.h * phys.h / (6.0 * phys.ell * phys.ell);
  d.chi = 2.0 * phys.D_axial / phys.ell;
  d.kappa = 2.0 * phys.kappa_core * phys.ell * phys.ell * (1.0 - phys.nu_poisson * phys.nu_poisson) /
            (phys.E_mod * phys.omega_area * phys.h);
  d.slenderness = phys.h / phys.ell;
  if (phys.rho_density) {
    d.tau0 = std::sqrt(2.0 * phys.ell * phys.ell * *phys.rho_density * (1.0 + phys.nu_poisson) /
                       phys.E_mod);
  }
  check_order("chi", d.chi, d.slenderness, d.warnings);
  check_order("kappa", d.kappa, d.slenderness, d.warnings);

  out.params.beta = d.chi / d.delta;
  out.params.varrho = 1.0 / d.delta;
  out.params.k = d.kappa / d.delta;
  return out;
}

}  // namespace beamforge
