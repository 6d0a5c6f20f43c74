#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beamforge/mode_sets.hpp"
#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace beamforge {

/// A continuum of equidistributed-energy solutions
///   u = sum x_i e_{n_i},  v = sum sign_i x_i e_{n_i},
/// with sum coeffs_i x_i^2 + constant = 0 and every x_i != 0.
struct EEFamily {
  FamilyKind kind = FamilyKind::B1;
  std::vector<int> modes;          // 2 or 3 strictly increasing indices
  std::vector<double> coeffs;      // varrho * lambda_{n_i}
  double constant = 0.0;           // B1: l1+l2+beta, B2: l2+beta, T: l3+beta
  std::vector<int> sign_pattern;   // B1: (-1,-1), B2: (-1,+1), T: (-1,-1,+1)

  bool nonempty() const { return constant < 0.0; }
  /// Semi-axis of the quadric along mode i: sqrt(-constant / coeffs[i]).
  double radius(std::size_t i) const;
  /// sum coeffs_i x_i^2 + constant.
  double quadric_value(const std::vector<double>& x) const;
};

/// The family on `indices` (2 or 3 of them), or nullopt when the membership
/// test for B1/B2 (pairs) or T (triples) fails.
std::optional<EEFamily> ee_family(const Params& p, const Spectrum& spec,
                                  const std::vector<int>& indices,
                                  double tol = kDefaultConditionTol);

/// Every family present at these parameters: B1/B2 pairs then T triples.
std::vector<EEFamily> enumerate_ee_families(const Params& p, const Spectrum& spec,
                                            double tol = kDefaultConditionTol);

/// Relative distance from the quadric below which a coordinate counts as zero.
inline constexpr double kAxisMargin = 1e-6;

/// Member at the given angles: theta for pairs (x = R1 cos, y = R2 sin); for
/// triples (theta, phi) spherical angles. Returns nullopt when a coordinate is
/// within kAxisMargin of its axis (coordinate hyperplanes are excluded).
std::optional<ModalSolution> family_member(const EEFamily& fam, double theta, double phi = 0.0);

/// `count` members drawn by uniform angles from a splitmix-seeded generator.
/// Near-axis draws are rejected and redrawn. Throws ValidationError for an
/// empty family.
std::vector<ModalSolution> sample_family(const EEFamily& fam, int count, std::uint64_t seed);

}  // namespace beamforge
