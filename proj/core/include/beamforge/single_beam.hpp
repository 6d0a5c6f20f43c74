#pragma once

#include <map>
#include <vector>

#include "beamforge/mode_sets.hpp"
#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace beamforge {

// Single-beam reference models sharing Params and Spectrum with the coupled system:
//   plain:       A u + C_u u = 0
//   foundation:  A^2 u + C_u A u + k u = 0

enum class SingleBeamModel { Plain, Foundation };

const char* to_string(SingleBeamModel m);

struct SingleBeamMode {
  int n = 0;
  double amplitude = 0.0;  // signed
};

struct SingleBeamFamily {
  int n1 = 0, n2 = 0;
  std::vector<double> coeffs;  // varrho lambda_{n_i}
  double constant = 0.0;       // lambda1 + lambda2 + beta
};

struct SingleBeamSolutionSet {
  SingleBeamModel model = SingleBeamModel::Plain;
  std::vector<SingleBeamMode> unimodal;         // + then - per mode
  std::vector<SingleBeamFamily> bimodal_families;  // foundation only
};

/// 2|E| amplitudes +-sqrt((-beta - lambda_n) / (varrho lambda_n)); k is ignored.
SingleBeamSolutionSet enumerate_plain(const Params& p, const Spectrum& spec);

/// Unimodal amplitudes on F = {n : k/lambda_n + lambda_n < -beta} and the
/// bimodal quadrics on G = {lambda1 lambda2 = k, lambda1 + lambda2 < -beta}.
SingleBeamSolutionSet enumerate_foundation(const Params& p, const Spectrum& spec,
                                           double tol = kDefaultConditionTol);

/// Largest per-mode residual of lambda^2 a + C_u lambda a (+ k a), relative to
/// the largest term. `coeffs` maps mode index to amplitude.
double single_beam_residual(SingleBeamModel model, const std::map<int, double>& coeffs,
                            const Params& p, const Spectrum& spec);

}  // namespace beamforge
