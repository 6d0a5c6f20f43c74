#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace beamforge {

/// Which side of the resonance thresholds a pair (n1, n2) sits on.
enum class PairRegime {
  BelowK,         // lambda1 lambda2 in (0, k): real, never solvable
  BetweenKAnd2K,  // lambda1 lambda2 in (k, 2k): solvable for m < -beta < M
  AboveTwoK,      // lambda1 (lambda2 - lambda1) in (2k, inf): solvable for M < -beta
  EeDegenerate,   // lambda1 lambda2 = 2k or lambda1 (lambda2 - lambda1) = 2k: X = Y, EE families
};

const char* to_string(PairRegime r);

/// Derived algebra for a mode pair n1 < n2. Present only when X, Y, W, Z are real.
struct BimodalInvariants {
  int n1 = 0, n2 = 0;
  double lambda1 = 0.0, lambda2 = 0.0;
  double k = 0.0;
  double zeta = 0.0;   // lambda2 / lambda1 > 1
  double sigma = 0.0;  // (k - lambda1 lambda2) / k, nonzero
  double phi = 0.0, psi = 0.0;
  double x = 0.0, y = 0.0, w = 0.0, z = 0.0;  // X, Y roots of t^2 - Phi t + 1; W, Z of t^2 - Psi t + 1
  double x_minus_y = 0.0;                     // sqrt(Phi^2 - 4) >= 0
  double f = 0.0, g = 0.0;                    // C_u and C_v on the XW branch
  double m_small = 0.0, m_big = 0.0;          // thresholds m and M
  double nu_shift = 0.0;                      // k (X - Y) / (varrho lambda1^2)
  PairRegime regime = PairRegime::BelowK;
};

/// nullopt when sigma = 0 (lambda1 lambda2 = k) or the roots are complex.
std::optional<BimodalInvariants> compute_invariants(const Params& p, const Spectrum& spec, int n1,
                                                    int n2);

/// The alternative expressions of m and M through X, Y, W, Z:
/// {-g - k W^2 (X-Y) / (l1 (W^2-1)),  -g - k (X-Y) / (l1 (1-Z^2)),
///  -g - k X^2 (X-Y) / (l1 (X^2-1)),  -g - k (X-Y) / (l1 (1-Y^2))}.
std::array<double, 4> threshold_alternate_forms(const BimodalInvariants& inv);

enum class CircleEllipseSystem { SIS1, SIS2 };
enum class CircleEllipseStatus { Solved, NoRealSolution, EeDegenerate };

struct CircleEllipseSolutions {
  CircleEllipseSystem which = CircleEllipseSystem::SIS1;
  CircleEllipseStatus status = CircleEllipseStatus::NoRealSolution;
  /// Empty or the sign quadruple (r,t), (r,-t), (-r,t), (-r,-t) with r, t > 0 first.
  std::vector<std::pair<double, double>> roots;
};

/// Solves
///   SIS1: varrho l1 r^2 + varrho l2 t^2 + beta = f,  varrho l1 X^2 r^2 + varrho l2 W^2 t^2 + beta = g
///   SIS2: same with (g, f) on the right and (Y, Z) in place of (X, W),
/// through s = sqrt(zeta) t as a circle/ellipse intersection. Roots are returned
/// only when the regime's threshold condition holds.
CircleEllipseSolutions solve_circle_ellipse(const BimodalInvariants& inv, const Params& p,
                                            CircleEllipseSystem which);

/// Residual of (r, t) in the chosen system, relative to the right-hand side.
double circle_ellipse_residual(const BimodalInvariants& inv, const Params& p,
                               CircleEllipseSystem which, double r, double t);

enum class StarSet { BStar1, BStar2 };

/// BStar1: regime (k, 2k) and m < -beta < M. BStar2: regime above 2k and M < -beta.
std::optional<StarSet> general_bimodal_membership(const Params& p, const Spectrum& spec, int n1,
                                                  int n2);

struct StarPairMember {
  int n1 = 0, n2 = 0;
  StarSet set = StarSet::BStar1;
};

/// Scan of B* over n2 <= n_star.
std::vector<StarPairMember> scan_general_bimodal(const Params& p, const Spectrum& spec);

/// The 8 non-EE bimodal solutions of every B* pair (4 XW then 4 YZ), or of the
/// single pair given.
std::vector<ModalSolution> enumerate_general_bimodal(
    const Params& p, const Spectrum& spec,
    std::optional<std::pair<int, int>> only_pair = std::nullopt);

}  // namespace beamforge
