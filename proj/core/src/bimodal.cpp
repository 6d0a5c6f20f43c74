#include "beamforge/bimodal.hpp"

#include <cmath>
#include <stdexcept>

#include "beamforge/mode_sets.hpp"

namespace beamforge {

namespace {

constexpr double kDegenerateRelTol = 1e-12;

// Roots of t^2 - s t + 1 = 0 given s and sqrt(s^2 - 4): larger root first.
// The root of larger magnitude comes from the formula, its partner from the product 1.
std::pair<double, double> unit_product_roots(double s, double sqrt_disc) {
  const double big = 0.5 * (s + std::copysign(sqrt_disc, s));
  const double small = 1.0 / big;
  return s >= 0.0 ? std::pair{big, small} : std::pair{small, big};
}

}  // namespace

const char* to_string(PairRegime r) {
  switch (r) {
    case PairRegime::BelowK: return "below-k";
    case PairRegime::BetweenKAnd2K: return "between-k-2k";
    case PairRegime::AboveTwoK: return "above-2k";
    case PairRegime::EeDegenerate: return "ee-degenerate";
  }
  return "ee-degenerate";
}

std::optional<BimodalInvariants> compute_invariants(const Params& p, const Spectrum& spec, int n1,
                                                    int n2) {
  if (!(n1 < n2)) throw std::invalid_argument("compute_invariants: need n1 < n2");
  BimodalInvariants inv;
  inv.n1 = n1;
  inv.n2 = n2;
  inv.k = p.k;
  const double l1 = inv.lambda1 = spec.eigenvalue(n1);
  const double l2 = inv.lambda2 = spec.eigenvalue(n2);
  const double k = p.k;
  const double prod = l1 * l2;
  const double gap = l1 * (l2 - l1);
  if (prod == k) return std::nullopt;

  inv.zeta = l2 / l1;
  inv.sigma = (k - prod) / k;
  const double zeta = inv.zeta;
  const double sigma = inv.sigma;
  const double s2 = sigma * sigma;
  inv.phi = ((zeta + 1.0) + (zeta - 1.0) * s2) / (sigma * zeta);
  inv.psi = ((zeta + 1.0) - (zeta - 1.0) * s2) / sigma;

  // Psi^2 - 4 = (sigma^2 - 1)((zeta-1)^2 sigma^2 - (zeta+1)^2) / sigma^2, written
  // through the four linear factors to keep the boundary zeros exact:
  //   sigma - 1 = -l1 l2 / k,   sigma + 1 = (2k - l1 l2) / k,
  //   (zeta-1) sigma - (zeta+1) = -(2k + l2 (l2 - l1)) / k,
  //   (zeta-1) sigma + (zeta+1) = l2 (2k - l1 (l2 - l1)) / (l1 k).
  const double two_k = 2.0 * k;
  const bool at_b1 = std::abs(two_k - prod) <= kDegenerateRelTol * two_k;
  const bool at_b2 = std::abs(two_k - gap) <= kDegenerateRelTol * two_k;
  const double near_b1 = at_b1 ? 0.0 : two_k - prod;
  const double near_b2 = at_b2 ? 0.0 : two_k - gap;
  const double positive_part = (prod / k) * ((two_k + l2 * (l2 - l1)) / k);
  const double signed_part = (near_b1 / k) * (l2 * near_b2 / (l1 * k));
  const double psi_disc = positive_part * signed_part / s2;
  if (psi_disc < 0.0) return std::nullopt;
  const double sqrt_psi_disc = std::sqrt(psi_disc);
  const double sqrt_phi_disc = sqrt_psi_disc / zeta;

  std::tie(inv.x, inv.y) = unit_product_roots(inv.phi, sqrt_phi_disc);
  std::tie(inv.w, inv.z) = unit_product_roots(inv.psi, sqrt_psi_disc);
  inv.x_minus_y = sqrt_phi_disc;

  inv.f = (k * inv.x - l1 * l1 - k) / l1;
  inv.g = (k * inv.y - l1 * l1 - k) / l1;
  inv.m_small = (k * k + k * l2 * (l2 - l1) + prod * prod) / ((prod - k) * l2);
  inv.m_big = (k * k - k * gap + prod * prod) / ((prod - k) * l1);
  inv.nu_shift = k * inv.x_minus_y / (p.varrho * l1 * l1);

  if (at_b1 || at_b2) {
    inv.regime = PairRegime::EeDegenerate;
  } else if (prod < k) {
    inv.regime = PairRegime::BelowK;
  } else if (prod < two_k) {
    inv.regime = PairRegime::BetweenKAnd2K;
  } else {
    inv.regime = PairRegime::AboveTwoK;
  }
  return inv;
}

std::array<double, 4> threshold_alternate_forms(const BimodalInvariants& inv) {
  const double kd = inv.k * inv.x_minus_y / inv.lambda1;
  const double w2 = inv.w * inv.w;
  const double x2 = inv.x * inv.x;
  return {-inv.g - kd * w2 / (w2 - 1.0), -inv.g - kd / (1.0 - inv.z * inv.z),
          -inv.g - kd * x2 / (x2 - 1.0), -inv.g - kd / (1.0 - inv.y * inv.y)};
}

namespace {

bool threshold_condition(const BimodalInvariants& inv, const Params& p) {
  const double load = -p.beta;
  switch (inv.regime) {
    case PairRegime::BetweenKAnd2K: return inv.m_small < load && load < inv.m_big;
    case PairRegime::AboveTwoK: return inv.m_big < load;
    case PairRegime::BelowK:
    case PairRegime::EeDegenerate: return false;
  }
  return false;
}

}  // namespace

CircleEllipseSolutions solve_circle_ellipse(const BimodalInvariants& inv, const Params& p,
                                            CircleEllipseSystem which) {
  CircleEllipseSolutions out;
  out.which = which;
  if (inv.regime == PairRegime::EeDegenerate) {
    out.status = CircleEllipseStatus::EeDegenerate;
    return out;
  }
  if (!threshold_condition(inv, p)) {
    out.status = CircleEllipseStatus::NoRealSolution;
    return out;
  }
  // r^2 + s^2 = radius2, a^2 r^2 + b^2 s^2 = ellipse_rhs.
  const double big_f = (inv.f - p.beta) / (p.varrho * inv.lambda1);
  const double big_g = (inv.g - p.beta) / (p.varrho * inv.lambda1);
  const bool first = which == CircleEllipseSystem::SIS1;
  const double radius2 = first ? big_f : big_g;
  const double ellipse_rhs = first ? big_g : big_f;
  const double a2 = first ? inv.x * inv.x : inv.y * inv.y;
  const double b2 = first ? inv.w * inv.w : inv.z * inv.z;
  const double r2 = (ellipse_rhs - b2 * radius2) / (a2 - b2);
  const double s2 = (ellipse_rhs - a2 * radius2) / (b2 - a2);
  if (!(r2 > 0.0 && s2 > 0.0)) {
    out.status = CircleEllipseStatus::NoRealSolution;
    return out;
  }
  const double r = std::sqrt(r2);
  const double t = std::sqrt(s2 / inv.zeta);
  out.status = CircleEllipseStatus::Solved;
  out.roots = {{r, t}, {r, -t}, {-r, t}, {-r, -t}};
  return out;
}

double circle_ellipse_residual(const BimodalInvariants& inv, const Params& p,
                               CircleEllipseSystem which, double r, double t) {
  const bool first = which == CircleEllipseSystem::SIS1;
  const double a = first ? inv.x : inv.y;
  const double b = first ? inv.w : inv.z;
  const double rhs1 = first ? inv.f : inv.g;
  const double rhs2 = first ? inv.g : inv.f;
  const double pr = p.varrho * inv.lambda1 * r * r;
  const double pt = p.varrho * inv.lambda2 * t * t;
  const double e1 = pr + pt + p.beta - rhs1;
  const double e2 = pr * a * a + pt * b * b + p.beta - rhs2;
  const double scale = std::max({1.0, std::abs(rhs1), std::abs(rhs2), std::abs(p.beta)});
  return std::max(std::abs(e1), std::abs(e2)) / scale;
}

std::optional<StarSet> general_bimodal_membership(const Params& p, const Spectrum& spec, int n1,
                                                  int n2) {
  const auto inv = compute_invariants(p, spec, n1, n2);
  if (!inv || !threshold_condition(*inv, p)) return std::nullopt;
  return inv->regime == PairRegime::BetweenKAnd2K ? StarSet::BStar1 : StarSet::BStar2;
}

std::vector<StarPairMember> scan_general_bimodal(const Params& p, const Spectrum& spec) {
  std::vector<StarPairMember> out;
  const int n_star = effective_modes(p, spec).n_star;
  for (int n1 = 1; n1 <= n_star; ++n1) {
    for (int n2 = n1 + 1; n2 <= n_star; ++n2) {
      if (auto set = general_bimodal_membership(p, spec, n1, n2)) out.push_back({n1, n2, *set});
    }
  }
  return out;
}

namespace {

void emit_pair(const BimodalInvariants& inv, const Params& p, std::vector<ModalSolution>& out) {
  for (auto which : {CircleEllipseSystem::SIS1, CircleEllipseSystem::SIS2}) {
    const auto sols = solve_circle_ellipse(inv, p, which);
    const bool first = which == CircleEllipseSystem::SIS1;
    const double a = first ? inv.x : inv.y;
    const double b = first ? inv.w : inv.z;
    for (const auto& [r, t] : sols.roots) {
      ModalSolution sol;
      sol.modes[inv.n1] = {r, a * r};
      sol.modes[inv.n2] = {t, b * t};
      sol.tag = {BranchKind::GeneralBimodal, first ? "XW" : "YZ"};
      out.push_back(std::move(sol));
    }
  }
}

}  // namespace

std::vector<ModalSolution> enumerate_general_bimodal(const Params& p, const Spectrum& spec,
                                                     std::optional<std::pair<int, int>> only_pair) {
  std::vector<ModalSolution> out;
  if (only_pair) {
    if (auto inv = compute_invariants(p, spec, only_pair->first, only_pair->second)) {
      emit_pair(*inv, p, out);
    }
    return out;
  }
  for (const auto& m : scan_general_bimodal(p, spec)) {
    emit_pair(*compute_invariants(p, spec, m.n1, m.n2), p, out);
  }
  return out;
}

}  // namespace beamforge
