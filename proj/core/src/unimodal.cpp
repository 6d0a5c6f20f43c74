#include "beamforge/unimodal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beamforge {

double UAmplitudeSet::magnitude(int branch) const {
  for (const auto& e : entries) {
    if (e.branch == branch) return std::abs(e.value);
  }
  return 0.0;
}

double omega_factor(double lambda, double k) { return lambda * lambda / k; }

double eta_factor(double lambda, const Params& p) {
  return 1.0 + p.beta / lambda + p.k / (lambda * lambda);
}

UAmplitudeSet u_amplitudes(const Params& p, const Spectrum& spec, int n) {
  UAmplitudeSet set;
  set.n = n;
  const double lambda = spec.eigenvalue(n);
  set.mode_class = classify_mode(lambda, p);
  if (set.mode_class == ModeClass::Outside) return set;

  const double load = -p.beta;
  const double denom = p.varrho * lambda;
  auto push_pair = [&](int branch, double magnitude) {
    set.entries.push_back({branch, +1, magnitude});
    set.entries.push_back({branch, -1, -magnitude});
  };

  push_pair(1, std::sqrt((load - lambda) / denom));
  if (set.mode_class == ModeClass::E1) return set;

  push_pair(2, std::sqrt((load - mu_threshold(lambda, p.k)) / denom));
  if (set.mode_class == ModeClass::E2) return set;

  // With d = k / lambda and c = -beta - lambda the radicand of the inner root is
  // (beta + lambda + mu - nu)(beta + nu) = (c + d)(c - 3d), both factors of one
  // sign in E3; the outer numerators are a +- sqrt(prod) with a = c - d.
  const double d = p.k / lambda;
  const double c = load - lambda;
  const double f1 = p.beta + lambda + mu_threshold(lambda, p.k) - nu_threshold(lambda, p.k);
  const double f2 = p.beta + nu_threshold(lambda, p.k);
  const double root = std::sqrt(f1 * f2);
  const double a = c - d;
  const double upper = a + root;
  // a^2 - prod = 4 d^2, so the smaller numerator follows from the product of roots.
  const double lower = 4.0 * d * d / upper;
  push_pair(3, std::sqrt(upper / (2.0 * denom)));
  push_pair(4, std::sqrt(lower / (2.0 * denom)));
  return set;
}

double paired_gamma(const UAmplitudeSet& set, const UAmplitude& amp) {
  auto find = [&](int branch, int sign) {
    for (const auto& e : set.entries) {
      if (e.branch == branch && e.sign == sign) return e.value;
    }
    throw std::logic_error("paired_gamma: branch " + std::to_string(branch) + " absent");
  };
  switch (amp.branch) {
    case 1: return find(1, amp.sign);
    case 2: return find(2, -amp.sign);
    case 3: return find(4, -amp.sign);
    case 4: return find(3, -amp.sign);
    default: throw std::invalid_argument("paired_gamma: branch must be 1..4");
  }
}

std::vector<ModalSolution> enumerate_unimodal(const Params& p, const Spectrum& spec) {
  std::vector<ModalSolution> out;
  const auto part = effective_modes(p, spec);
  for (int n : part.E) {
    const auto set = u_amplitudes(p, spec, n);
    for (const auto& amp : set.entries) {
      ModalSolution sol;
      sol.modes[n] = {amp.value, paired_gamma(set, amp)};
      sol.tag = {BranchKind::Unimodal, std::to_string(amp.branch) + (amp.sign > 0 ? ",+" : ",-")};
      out.push_back(std::move(sol));
    }
  }
  return out;
}

}  // namespace beamforge
