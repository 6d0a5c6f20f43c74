#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beamforge/spectrum.hpp"

namespace beamforge {

/// Dimensionless parameters of the stationary double-beam system
///   A^2 u + C_u A u + k (u - v) = 0,   A^2 v + C_v A v - k (u - v) = 0,
/// with C_u = beta + varrho |u|_1^2 and C_v = beta + varrho |v|_1^2.
struct Params {
  double beta = 0.0;    // axial load, any sign (compression is negative)
  double varrho = 1.0;  // extensibility, > 0
  double k = 1.0;       // coupling stiffness, > 0

  /// Throws ValidationError unless varrho > 0, k > 0 and all fields are finite.
  void validate() const;
};

struct ModeCoeffs {
  double alpha = 0.0;  // coefficient of u on e_n
  double gamma = 0.0;  // coefficient of v on e_n
};

enum class BranchKind { Trivial, Unimodal, EEBimodal, EETrimodal, GeneralBimodal, Oracle };

/// Informational label naming the producing branch. Never consulted by the verifier.
struct BranchTag {
  BranchKind kind = BranchKind::Trivial;
  std::string detail;  // e.g. "3,+" for unimodal, "B1", "XW"

  std::string str() const;
  static BranchTag parse(const std::string& text);
};

/// A stationary state in modal form: u = sum alpha_n e_n, v = sum gamma_n e_n.
struct ModalSolution {
  std::map<int, ModeCoeffs> modes;
  BranchTag tag;

  /// Modes whose coefficient pair is not (0, 0).
  int active_count() const;
  bool is_trivial() const { return active_count() == 0; }
};

/// Throws ValidationError when the solution has more than three active modes or
/// a mode with exactly one of alpha, gamma equal to zero.
void validate_structure(const ModalSolution& sol);

struct AxialCoefficients {
  double c_u = 0.0;
  double c_v = 0.0;
};

/// C_u = beta + varrho sum lambda_n alpha_n^2 and likewise for C_v.
/// Throws std::out_of_range for a mode index outside the spectrum.
AxialCoefficients axial_coefficients(const ModalSolution& sol, const Params& p,
                                     const Spectrum& spec);

struct ModeResidual {
  int n = 0;
  double r1 = 0.0;  // lambda^2 alpha + C_u lambda alpha + k (alpha - gamma)
  double r2 = 0.0;  // lambda^2 gamma + C_v lambda gamma - k (alpha - gamma)
};

struct ResidualReport {
  std::vector<ModeResidual> modes;
  double max_abs = 0.0;
  /// max_abs / max(1, largest individual term magnitude).
  double relative = 0.0;
  double largest_term = 0.0;
};

ResidualReport modal_residual(const ModalSolution& sol, const Params& p, const Spectrum& spec);

/// True iff |C_u - C_v| <= tol * max(1, |C_u|, |C_v|).
bool is_ee(const ModalSolution& sol, const Params& p, const Spectrum& spec, double tol);

/// P(lambda) = lambda^3 + (C_u+C_v) lambda^2 + (C_u C_v + 2k) lambda + k (C_u+C_v).
double cubic_p(double lambda, double c_u, double c_v, double k);

struct CubicPoint {
  int n = 0;
  double lambda = 0.0;
  double value = 0.0;     // P(lambda)
  double relative = 0.0;  // |P| over the largest monomial magnitude (at least 1)
  /// (lambda + C_u)(lambda^2 + C_u lambda + 2k), filled only for EE solutions.
  std::optional<double> factored;
};

struct CubicReport {
  std::vector<CubicPoint> points;
  bool ee = false;
  double max_relative = 0.0;
  /// Largest relative disagreement between expanded and factored forms (EE only).
  double factorization_gap = 0.0;
};

/// Evaluates P at every active eigenvalue. Requires a nontrivial solution.
CubicReport cubic_check(const ModalSolution& sol, const Params& p, const Spectrum& spec,
                        double ee_tol = 1e-10);

/// Residual scale used for absolute tolerances:
/// max(1, lambda_max^2, k, |beta| lambda_max) over the active modes.
double residual_scale(const ModalSolution& sol, const Params& p, const Spectrum& spec);

}  // namespace beamforge
