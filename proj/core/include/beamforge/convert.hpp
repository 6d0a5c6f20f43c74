#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beamforge/solution.hpp"

namespace beamforge {

/// Physical data of two identical Woinowsky-Krieger beams joined by an elastic core.
struct PhysicalParams {
  double ell = 1.0;          // natural length
  double h = 0.01;           // thickness, 0 < h < ell
  double E_mod = 1.0;        // Young modulus (force per area)
  double nu_poisson = 0.3;   // Poisson ratio in (-1, 1/2)
  double D_axial = 0.0;      // axial end displacement, signed
  double kappa_core = 0.0;   // core stiffness (force per length), > 0
  double omega_area = 1.0;   // cross-section area
  std::optional<double> rho_density;  // only feeds the characteristic time

  void validate() const;
};

struct ConversionDiagnostics {
  double delta = 0.0;  // h^2 / (6 ell^2)
  double chi = 0.0;    // 2D / ell
  double kappa = 0.0;  // 2 kappa_core ell^2 (1 - nu^2) / (E |Omega| h)
  double slenderness = 0.0;  // h / ell
  std::optional<double> tau0;  // sqrt(2 ell^2 rho (1 + nu) / E)
  std::vector<std::string> warnings;
};

struct ConversionResult {
  Params params;
  ConversionDiagnostics diagnostics;
};

/// beta = chi / delta, varrho = 1 / delta, k = kappa / delta.
/// Warns (does not fail) when |chi| or kappa is more than a decade away from h / ell.
ConversionResult dimensionless_params(const PhysicalParams& phys);

}  // namespace beamforge
