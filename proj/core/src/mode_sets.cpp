#include "beamforge/mode_sets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beamforge {

const char* to_string(ModeClass c) {
  switch (c) {
    case ModeClass::Outside: return "outside";
    case ModeClass::E1: return "E1";
    case ModeClass::E2: return "E2";
    case ModeClass::E3: return "E3";
  }
  return "outside";
}

const char* to_string(EEPairKind k) { return k == EEPairKind::B1 ? "B1" : "B2"; }

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::B1: return "B1";
    case FamilyKind::B2: return "B2";
    case FamilyKind::T: return "T";
  }
  return "T";
}

double mu_threshold(double lambda, double k) { return 2.0 * k / lambda + lambda; }
double nu_threshold(double lambda, double k) { return 3.0 * k / lambda + lambda; }

ModeClass classify_mode(double lambda, const Params& p) {
  const double load = -p.beta;
  if (!(lambda < load)) return ModeClass::Outside;
  const double mu = mu_threshold(lambda, p.k);
  const double nu = nu_threshold(lambda, p.k);
  if (load <= mu * (1.0 + kBoundaryRelTol)) return ModeClass::E1;
  if (load <= nu * (1.0 + kBoundaryRelTol)) return ModeClass::E2;
  return ModeClass::E3;
}

ModeSetPartition effective_modes(const Params& p, const Spectrum& spec) {
  ModeSetPartition part;
  part.n_max_used = spec.n_max();
  for (int n = 1; n <= spec.n_max(); ++n) {
    const ModeClass c = classify_mode(spec.eigenvalue(n), p);
    if (c == ModeClass::Outside) break;  // lambda increasing: E is an initial segment
    part.E.push_back(n);
    switch (c) {
      case ModeClass::E1: part.E1.push_back(n); break;
      case ModeClass::E2: part.E2.push_back(n); break;
      case ModeClass::E3: part.E3.push_back(n); break;
      case ModeClass::Outside: break;
    }
  }
  part.n_star = part.E.empty() ? 0 : part.E.back();
  part.truncated = part.n_star == spec.n_max();
  return part;
}

int dirichlet_effective_count(double beta) {
  if (!(beta < 0.0)) return 0;
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return static_cast<int>(std::ceil(std::sqrt(-beta / pi2))) - 1;
}

bool rel_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

std::optional<EEPairKind> ee_bimodal_membership(const Params& p, const Spectrum& spec, int n1,
                                                int n2, double tol) {
  if (!(n1 < n2)) throw std::invalid_argument("ee_bimodal_membership: need n1 < n2");
  const double l1 = spec.eigenvalue(n1);
  const double l2 = spec.eigenvalue(n2);
  const double two_k = 2.0 * p.k;
  if (rel_equal(l1 * l2, two_k, tol) && l1 + l2 < -p.beta) return EEPairKind::B1;
  if (rel_equal(l1 * (l2 - l1), two_k, tol) && l2 < -p.beta) return EEPairKind::B2;
  return std::nullopt;
}

bool ee_trimodal_membership(const Params& p, const Spectrum& spec, int n1, int n2, int n3,
                            double tol) {
  if (!(n1 < n2 && n2 < n3)) {
    throw std::invalid_argument("ee_trimodal_membership: need n1 < n2 < n3");
  }
  const double l1 = spec.eigenvalue(n1);
  const double l2 = spec.eigenvalue(n2);
  const double l3 = spec.eigenvalue(n3);
  if (!(l3 < -p.beta)) return false;
  const double two_k = 2.0 * p.k;
  const double q1 = l1 * (l3 - l1);
  const double q2 = l2 * (l3 - l2);
  if (!rel_equal(q1, two_k, tol) || !rel_equal(q2, two_k, tol)) return false;
  // q1 - q2 = (l2 - l1)(l1 + l2 - l3), so the sum relation inherits the slack
  // of the two equalities amplified by 1/(l2 - l1).
  const double slack = (std::abs(q1 - two_k) + std::abs(q2 - two_k)) / (l2 - l1);
  if (std::abs(l1 + l2 - l3) > slack + 1e-12 * l3) {
    throw std::logic_error("ee_trimodal_membership: lambda1 + lambda2 != lambda3 for a member");
  }
  return true;
}

std::optional<double> required_k(const Spectrum& spec, const std::vector<int>& indices,
                                 FamilyKind family) {
  const bool triple = family == FamilyKind::T;
  if (indices.size() != (triple ? 3u : 2u) || !std::is_sorted(indices.begin(), indices.end()) ||
      std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw std::invalid_argument("required_k: indices must be strictly increasing, " +
                                std::string(triple ? "three" : "two") + " of them");
  }
  const double l1 = spec.eigenvalue(indices[0]);
  const double l2 = spec.eigenvalue(indices[1]);
  switch (family) {
    case FamilyKind::B1: return l1 * l2 / 2.0;
    case FamilyKind::B2: return l1 * (l2 - l1) / 2.0;
    case FamilyKind::T: {
      const double l3 = spec.eigenvalue(indices[2]);
      const double q1 = l1 * (l3 - l1);
      const double q2 = l2 * (l3 - l2);
      if (!rel_equal(q1, q2, 1e-12)) return std::nullopt;
      return q1 / 2.0;
    }
  }
  return std::nullopt;
}

std::vector<EEPairMember> scan_ee_bimodal(const Params& p, const Spectrum& spec, double tol) {
  std::vector<EEPairMember> out;
  const int n_star = effective_modes(p, spec).n_star;
  for (int n2 = 2; n2 <= n_star; ++n2) {
    for (int n1 = 1; n1 < n2; ++n1) {
      if (auto kind = ee_bimodal_membership(p, spec, n1, n2, tol)) out.push_back({n1, n2, *kind});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.n1 != b.n1 ? a.n1 < b.n1 : a.n2 < b.n2;
  });
  return out;
}

std::vector<TripleMember> scan_ee_trimodal(const Params& p, const Spectrum& spec, double tol) {
  std::vector<TripleMember> out;
  const int n_star = effective_modes(p, spec).n_star;
  for (int n1 = 1; n1 <= n_star; ++n1) {
    for (int n2 = n1 + 1; n2 <= n_star; ++n2) {
      for (int n3 = n2 + 1; n3 <= n_star; ++n3) {
        if (ee_trimodal_membership(p, spec, n1, n2, n3, tol)) out.push_back({n1, n2, n3});
      }
    }
  }
  return out;
}

}  // namespace beamforge
