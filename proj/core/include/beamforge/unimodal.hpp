#pragma once

#include <vector>

#include "beamforge/mode_sets.hpp"
#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace beamforge {

/// One closed-form u-amplitude alpha_{n,i}^{sign}.
struct UAmplitude {
  int branch = 1;  // i in {1, 2, 3, 4}
  int sign = +1;   // +1 or -1
  double value = 0.0;
};

struct UAmplitudeSet {
  int n = 0;
  ModeClass mode_class = ModeClass::Outside;
  /// 0, 2, 4 or 8 entries for Outside, E1, E2, E3; ordered by branch then sign (+ first).
  std::vector<UAmplitude> entries;

  /// Magnitude |alpha_{n,i}|, or 0 when the branch is absent.
  double magnitude(int branch) const;
};

/// The distinct nontrivial u-amplitudes of mode n. Coincident branches at the
/// class boundaries are collapsed.
UAmplitudeSet u_amplitudes(const Params& p, const Spectrum& spec, int n);

/// v-coefficient paired with u = alpha_{n,i}^{sign}:
/// i=1 -> alpha_1^{sign}, i=2 -> alpha_2^{-sign}, i=3 -> alpha_4^{-sign}, i=4 -> alpha_3^{-sign}.
double paired_gamma(const UAmplitudeSet& set, const UAmplitude& amp);

/// Every nontrivial unimodal solution, ordered by mode, branch, sign.
/// The count is 2|E1| + 4|E2| + 8|E3|.
std::vector<ModalSolution> enumerate_unimodal(const Params& p, const Spectrum& spec);

/// omega_n = lambda_n^2 / k.
double omega_factor(double lambda, double k);
/// eta_n = 1 + beta / lambda_n + k / lambda_n^2.
double eta_factor(double lambda, const Params& p);

}  // namespace beamforge
