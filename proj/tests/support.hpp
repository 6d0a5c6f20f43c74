#pragma once

// Reference computations written directly from the model equations, kept
// separate from the library code paths they check.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace ref {

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool abs_close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Direct substitution into both modal equations; returns max |r| / max(1, largest term).
inline double residual(const std::map<int, std::pair<double, double>>& c, double beta,
                       double varrho, double k, const beamforge::Spectrum& spec) {
  double su = 0.0, sv = 0.0;
  for (const auto& [n, ag] : c) {
    su += spec(n) * ag.first * ag.first;
    sv += spec(n) * ag.second * ag.second;
  }
  const double cu = beta + varrho * su;
  const double cv = beta + varrho * sv;
  double worst = 0.0, big = 1.0;
  for (const auto& [n, ag] : c) {
    const double l = spec(n);
    const auto [a, g] = ag;
    const double t1[] = {l * l * a, cu * l * a, k * a, k * g};
    const double t2[] = {l * l * g, cv * l * g, k * a, k * g};
    for (double t : t1) big = std::max(big, std::abs(t));
    for (double t : t2) big = std::max(big, std::abs(t));
    worst = std::max(worst, std::abs(l * l * a + cu * l * a + k * (a - g)));
    worst = std::max(worst, std::abs(l * l * g + cv * l * g - k * (a - g)));
  }
  return worst / big;
}

inline double residual(const beamforge::ModalSolution& s, const beamforge::Params& p,
                       const beamforge::Spectrum& spec) {
  std::map<int, std::pair<double, double>> c;
  for (const auto& [n, m] : s.modes) c[n] = {m.alpha, m.gamma};
  return residual(c, p.beta, p.varrho, p.k, spec);
}

// Brute-force membership of E: every n with lambda_n < -beta.
inline std::vector<int> effective(double beta, const beamforge::Spectrum& spec) {
  std::vector<int> out;
  for (int n = 1; n <= spec.n_max(); ++n) {
    if (spec(n) < -beta) out.push_back(n);
  }
  return out;
}

// Naive quadratic roots of t^2 - s t + 1, larger first.
inline std::pair<double, double> unit_roots(double s) {
  const double d = std::sqrt(s * s - 4.0);
  return {(s + d) / 2.0, (s - d) / 2.0};
}

}  // namespace ref
