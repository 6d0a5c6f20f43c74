#include "beamforge/single_beam.hpp"

#include <algorithm>
#include <cmath>

namespace beamforge {

const char* to_string(SingleBeamModel m) {
  return m == SingleBeamModel::Plain ? "plain" : "foundation";
}

SingleBeamSolutionSet enumerate_plain(const Params& p, const Spectrum& spec) {
  SingleBeamSolutionSet set;
  set.model = SingleBeamModel::Plain;
  for (int n : effective_modes(p, spec).E) {
    const double lambda = spec.eigenvalue(n);
    const double a = std::sqrt((-p.beta - lambda) / (p.varrho * lambda));
    set.unimodal.push_back({n, a});
    set.unimodal.push_back({n, -a});
  }
  return set;
}

SingleBeamSolutionSet enumerate_foundation(const Params& p, const Spectrum& spec, double tol) {
  SingleBeamSolutionSet set;
  set.model = SingleBeamModel::Foundation;
  for (int n = 1; n <= spec.n_max(); ++n) {
    const double lambda = spec.eigenvalue(n);
    if (!(lambda < -p.beta)) break;  // F is contained in E
    const double excess = -p.beta - p.k / lambda - lambda;
    if (!(excess > 0.0)) continue;
    const double a = std::sqrt(excess / (p.varrho * lambda));
    set.unimodal.push_back({n, a});
    set.unimodal.push_back({n, -a});
  }
  const int n_star = effective_modes(p, spec).n_star;
  for (int n2 = 2; n2 <= n_star; ++n2) {
    for (int n1 = 1; n1 < n2; ++n1) {
      const double l1 = spec.eigenvalue(n1);
      const double l2 = spec.eigenvalue(n2);
      if (rel_equal(l1 * l2, p.k, tol) && l1 + l2 < -p.beta) {
        set.bimodal_families.push_back({n1, n2, {p.varrho * l1, p.varrho * l2}, l1 + l2 + p.beta});
      }
    }
  }
  std::sort(set.bimodal_families.begin(), set.bimodal_families.end(),
            [](const auto& a, const auto& b) { return a.n1 != b.n1 ? a.n1 < b.n1 : a.n2 < b.n2; });
  return set;
}

double single_beam_residual(SingleBeamModel model, const std::map<int, double>& coeffs,
                            const Params& p, const Spectrum& spec) {
  double sum = 0.0;
  for (const auto& [n, a] : coeffs) sum += spec.eigenvalue(n) * a * a;
  const double c_u = p.beta + p.varrho * sum;
  const double k = model == SingleBeamModel::Foundation ? p.k : 0.0;
  double worst = 0.0;
  double largest = 0.0;
  for (const auto& [n, a] : coeffs) {
    const double lambda = spec.eigenvalue(n);
    const double t1 = lambda * lambda * a;
    const double t2 = c_u * lambda * a;
    const double t3 = k * a;
    worst = std::max(worst, std::abs(t1 + t2 + t3));
    largest = std::max({largest, std::abs(t1), std::abs(t2), std::abs(t3)});
  }
  return worst / std::max(1.0, largest);
}

}  // namespace beamforge
