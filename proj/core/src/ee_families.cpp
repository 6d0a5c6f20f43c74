#include "beamforge/ee_families.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "beamforge/errors.hpp"

namespace beamforge {

namespace {

// Portable uniform draw in [0, 1): the standard distributions are
// implementation-defined, which would break byte-identical output.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

EEFamily make_family(FamilyKind kind, const Params& p, const Spectrum& spec,
                     const std::vector<int>& modes) {
  EEFamily fam;
  fam.kind = kind;
  fam.modes = modes;
  for (int n : modes) fam.coeffs.push_back(p.varrho * spec.eigenvalue(n));
  const double l_first = spec.eigenvalue(modes.front());
  const double l_last = spec.eigenvalue(modes.back());
  switch (kind) {
    case FamilyKind::B1:
      fam.constant = l_first + l_last + p.beta;
      fam.sign_pattern = {-1, -1};
      break;
    case FamilyKind::B2:
      fam.constant = l_last + p.beta;
      fam.sign_pattern = {-1, +1};
      break;
    case FamilyKind::T:
      fam.constant = l_last + p.beta;
      fam.sign_pattern = {-1, -1, +1};
      break;
  }
  return fam;
}

}  // namespace

double EEFamily::radius(std::size_t i) const { return std::sqrt(-constant / coeffs.at(i)); }

double EEFamily::quadric_value(const std::vector<double>& x) const {
  double s = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x.at(i) * x.at(i);
  return s;
}

std::optional<EEFamily> ee_family(const Params& p, const Spectrum& spec,
                                  const std::vector<int>& indices, double tol) {
  if (indices.size() == 2) {
    if (!(indices[0] < indices[1])) throw std::invalid_argument("ee_family: indices not increasing");
    const auto kind = ee_bimodal_membership(p, spec, indices[0], indices[1], tol);
    if (!kind) return std::nullopt;
    return make_family(*kind == EEPairKind::B1 ? FamilyKind::B1 : FamilyKind::B2, p, spec,
                       indices);
  }
  if (indices.size() == 3) {
    if (!(indices[0] < indices[1] && indices[1] < indices[2])) {
      throw std::invalid_argument("ee_family: indices not increasing");
    }
    if (!ee_trimodal_membership(p, spec, indices[0], indices[1], indices[2], tol)) {
      return std::nullopt;
    }
    return make_family(FamilyKind::T, p, spec, indices);
  }
  throw std::invalid_argument("ee_family: expected 2 or 3 mode indices");
}

std::vector<EEFamily> enumerate_ee_families(const Params& p, const Spectrum& spec, double tol) {
  std::vector<EEFamily> out;
  for (const auto& m : scan_ee_bimodal(p, spec, tol)) {
    out.push_back(*ee_family(p, spec, {m.n1, m.n2}, tol));
  }
  for (const auto& t : scan_ee_trimodal(p, spec, tol)) {
    out.push_back(*ee_family(p, spec, {t.n1, t.n2, t.n3}, tol));
  }
  return out;
}

std::optional<ModalSolution> family_member(const EEFamily& fam, double theta, double phi) {
  if (!fam.nonempty()) throw ValidationError("family_member: quadric has no real points");
  std::vector<double> unit;
  if (fam.modes.size() == 2) {
    unit = {std::cos(theta), std::sin(theta)};
  } else {
    unit = {std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta), std::cos(phi)};
  }
  ModalSolution sol;
  sol.tag = fam.kind == FamilyKind::T
                ? BranchTag{BranchKind::EETrimodal, {}}
                : BranchTag{BranchKind::EEBimodal, to_string(fam.kind)};
  for (std::size_t i = 0; i < unit.size(); ++i) {
    if (std::abs(unit[i]) < kAxisMargin) return std::nullopt;
    const double x = fam.radius(i) * unit[i];
    sol.modes[fam.modes[i]] = {x, fam.sign_pattern[i] * x};
  }
  return sol;
}

std::vector<ModalSolution> sample_family(const EEFamily& fam, int count, std::uint64_t seed) {
  if (!fam.nonempty()) throw ValidationError("sample_family: degenerate family (constant >= 0)");
  if (count < 0) throw std::invalid_argument("sample_family: negative count");
  std::mt19937_64 rng(seed);
  std::vector<ModalSolution> out;
  out.reserve(static_cast<std::size_t>(count));
  constexpr double two_pi = 2.0 * std::numbers::pi;
  while (static_cast<int>(out.size()) < count) {
    const double theta = two_pi * unit_draw(rng);
    const double phi = std::numbers::pi * unit_draw(rng);
    if (auto member = family_member(fam, theta, phi)) out.push_back(std::move(*member));
  }
  return out;
}

}  // namespace beamforge
