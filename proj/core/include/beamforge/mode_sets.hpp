#pragma once

#include <optional>
#include <vector>

#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace beamforge {

/// Relative slack under which -beta is considered to sit exactly on mu_n or nu_n.
inline constexpr double kBoundaryRelTol = 1e-12;
/// Default relative tolerance for the measure-zero resonance equalities.
inline constexpr double kDefaultConditionTol = 1e-9;

enum class ModeClass { Outside, E1, E2, E3 };

const char* to_string(ModeClass c);

/// mu_n = 2k/lambda_n + lambda_n, the out-of-phase fork threshold.
double mu_threshold(double lambda, double k);
/// nu_n = 3k/lambda_n + lambda_n, the nonsymmetric fork threshold.
double nu_threshold(double lambda, double k);

/// Class of a single mode. The right-hand ends are inclusive, so -beta == mu_n
/// lands in E1 and -beta == nu_n in E2 (up to kBoundaryRelTol).
ModeClass classify_mode(double lambda, const Params& p);

struct ModeSetPartition {
  std::vector<int> E, E1, E2, E3;
  int n_star = 0;
  /// lambda_{n_max} < -beta: the scan was cut short by the spectrum cap.
  bool truncated = false;
  int n_max_used = 0;
};

ModeSetPartition effective_modes(const Params& p, const Spectrum& spec);

/// |E| for the Dirichlet Laplacian: ceil(sqrt(-beta / pi^2)) - 1 for beta < 0, else 0.
int dirichlet_effective_count(double beta);

enum class EEPairKind { B1, B2 };
enum class FamilyKind { B1, B2, T };

const char* to_string(EEPairKind k);
const char* to_string(FamilyKind k);

/// Relative equality a == b within tol * max(|a|, |b|).
bool rel_equal(double a, double b, double tol);

/// B1: lambda1 lambda2 = 2k and lambda1 + lambda2 < -beta.
/// B2: lambda1 (lambda2 - lambda1) = 2k and lambda2 < -beta.
std::optional<EEPairKind> ee_bimodal_membership(const Params& p, const Spectrum& spec, int n1,
                                                int n2, double tol = kDefaultConditionTol);

/// T: lambda3 < -beta and lambda1 (lambda3 - lambda1) = lambda2 (lambda3 - lambda2) = 2k.
/// Members also satisfy lambda1 + lambda2 = lambda3; a violation throws std::logic_error.
bool ee_trimodal_membership(const Params& p, const Spectrum& spec, int n1, int n2, int n3,
                            double tol = kDefaultConditionTol);

/// Coupling k at which the given index tuple becomes resonant for the family.
/// For T the two products must agree within 1e-12 relative, otherwise nullopt.
std::optional<double> required_k(const Spectrum& spec, const std::vector<int>& indices,
                                 FamilyKind family);

struct EEPairMember {
  int n1 = 0, n2 = 0;
  EEPairKind kind = EEPairKind::B1;
};

struct TripleMember {
  int n1 = 0, n2 = 0, n3 = 0;
};

/// All B1/B2 pairs, scanned over n2 <= n_star.
std::vector<EEPairMember> scan_ee_bimodal(const Params& p, const Spectrum& spec,
                                          double tol = kDefaultConditionTol);
/// All T triples, scanned over n3 <= n_star.
std::vector<TripleMember> scan_ee_trimodal(const Params& p, const Spectrum& spec,
                                           double tol = kDefaultConditionTol);

}  // namespace beamforge
