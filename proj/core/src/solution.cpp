#include "beamforge/solution.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "beamforge/errors.hpp"

namespace beamforge {

namespace {

double max_abs_of(std::initializer_list<double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

bool active(const ModeCoeffs& c) { return c.alpha != 0.0 || c.gamma != 0.0; }

}  // namespace

void Params::validate() const {
  if (!std::isfinite(beta) || !std::isfinite(varrho) || !std::isfinite(k)) {
    throw ValidationError("params: beta, varrho and k must be finite");
  }
  if (!(varrho > 0.0)) throw ValidationError("params: varrho must be > 0");
  if (!(k > 0.0)) throw ValidationError("params: k must be > 0");
}

std::string BranchTag::str() const {
  switch (kind) {
    case BranchKind::Trivial: return "trivial";
    case BranchKind::Unimodal: return "unimodal(" + detail + ")";
    case BranchKind::EEBimodal: return "ee-bimodal(" + detail + ")";
    case BranchKind::EETrimodal: return "ee-trimodal";
    case BranchKind::GeneralBimodal: return "general-bimodal(" + detail + ")";
    case BranchKind::Oracle: return "oracle";
  }
  return "oracle";
}

BranchTag BranchTag::parse(const std::string& text) {
  auto inner = [&](std::size_t prefix) {
    if (text.size() < prefix + 1 || text.back() != ')') {
      throw ValidationError("tag: malformed '" + text + "'");
    }
    return text.substr(prefix, text.size() - prefix - 1);
  };
  if (text == "trivial") return {BranchKind::Trivial, {}};
  if (text == "oracle") return {BranchKind::Oracle, {}};
  if (text == "ee-trimodal") return {BranchKind::EETrimodal, {}};
  if (text.rfind("unimodal(", 0) == 0) return {BranchKind::Unimodal, inner(9)};
  if (text.rfind("ee-bimodal(", 0) == 0) return {BranchKind::EEBimodal, inner(11)};
  if (text.rfind("general-bimodal(", 0) == 0) return {BranchKind::GeneralBimodal, inner(16)};
  throw ValidationError("tag: unknown branch label '" + text + "'");
}

int ModalSolution::active_count() const {
  return static_cast<int>(std::count_if(modes.begin(), modes.end(),
                                        [](const auto& kv) { return active(kv.second); }));
}

void validate_structure(const ModalSolution& sol) {
  for (const auto& [n, c] : sol.modes) {
    if ((c.alpha == 0.0) != (c.gamma == 0.0)) {
      throw ValidationError("solution: mode " + std::to_string(n) +
                            " has exactly one vanishing coefficient");
    }
    if (!std::isfinite(c.alpha) || !std::isfinite(c.gamma)) {
      throw ValidationError("solution: mode " + std::to_string(n) + " is not finite");
    }
  }
  if (sol.active_count() > 3) {
    throw ValidationError("solution: " + std::to_string(sol.active_count()) +
                          " active modes, at most 3 are possible");
  }
}

AxialCoefficients axial_coefficients(const ModalSolution& sol, const Params& p,
                                     const Spectrum& spec) {
  double su = 0.0;
  double sv = 0.0;
  for (const auto& [n, c] : sol.modes) {
    const double lambda = spec.eigenvalue(n);
    su += lambda * c.alpha * c.alpha;
    sv += lambda * c.gamma * c.gamma;
  }
  return {p.beta + p.varrho * su, p.beta + p.varrho * sv};
}

ResidualReport modal_residual(const ModalSolution& sol, const Params& p, const Spectrum& spec) {
  const auto [c_u, c_v] = axial_coefficients(sol, p, spec);
  ResidualReport report;
  for (const auto& [n, c] : sol.modes) {
    const double lambda = spec.eigenvalue(n);
    const double a = c.alpha;
    const double g = c.gamma;
    const double t1 = lambda * lambda * a;
    const double t2 = c_u * lambda * a;
    const double t3 = lambda * lambda * g;
    const double t4 = c_v * lambda * g;
    const ModeResidual r{n, t1 + t2 + p.k * (a - g), t3 + t4 - p.k * (a - g)};
    report.modes.push_back(r);
    report.max_abs = std::max({report.max_abs, std::abs(r.r1), std::abs(r.r2)});
    report.largest_term =
        std::max(report.largest_term, max_abs_of({t1, t2, t3, t4, p.k * a, p.k * g}));
  }
  report.relative = report.max_abs / std::max(1.0, report.largest_term);
  return report;
}

bool is_ee(const ModalSolution& sol, const Params& p, const Spectrum& spec, double tol) {
  const auto [c_u, c_v] = axial_coefficients(sol, p, spec);
  return std::abs(c_u - c_v) <= tol * std::max({1.0, std::abs(c_u), std::abs(c_v)});
}

double cubic_p(double lambda, double c_u, double c_v, double k) {
  const double s = c_u + c_v;
  return ((lambda + s) * lambda + (c_u * c_v + 2.0 * k)) * lambda + k * s;
}

CubicReport cubic_check(const ModalSolution& sol, const Params& p, const Spectrum& spec,
                        double ee_tol) {
  if (sol.is_trivial()) throw ValidationError("cubic_check: solution is trivial");
  const auto [c_u, c_v] = axial_coefficients(sol, p, spec);
  CubicReport report;
  report.ee = is_ee(sol, p, spec, ee_tol);
  for (const auto& [n, c] : sol.modes) {
    if (c.alpha == 0.0 && c.gamma == 0.0) continue;
    CubicPoint pt;
    pt.n = n;
    pt.lambda = spec.eigenvalue(n);
    const double l = pt.lambda;
    pt.value = cubic_p(l, c_u, c_v, p.k);
    const double scale = std::max(
        1.0, max_abs_of({l * l * l, (c_u + c_v) * l * l, (c_u * c_v + 2.0 * p.k) * l,
                         p.k * (c_u + c_v)}));
    pt.relative = std::abs(pt.value) / scale;
    if (report.ee) {
      pt.factored = (l + c_u) * (l * l + c_u * l + 2.0 * p.k);
      report.factorization_gap =
          std::max(report.factorization_gap, std::abs(*pt.factored - pt.value) / scale);
    }
    report.max_relative = std::max(report.max_relative, pt.relative);
    report.points.push_back(pt);
  }
  return report;
}

double residual_scale(const ModalSolution& sol, const Params& p, const Spectrum& spec) {
  double lambda_max = 0.0;
  for (const auto& [n, c] : sol.modes) {
    if (active(c)) lambda_max = std::max(lambda_max, spec.eigenvalue(n));
  }
  return std::max({1.0, lambda_max * lambda_max, p.k, std::abs(p.beta) * lambda_max});
}

}  // namespace beamforge
