#pragma once

#include <cstdint>
#include <vector>

#include "beamforge/ee_families.hpp"
#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace beamforge {

struct OracleOptions {
  int max_iterations = 200;
  int max_backtracks = 40;
  /// Extra Newton steps allowed once the residual is below tolerance.
  int max_polish = 60;
  /// Newton steps in extended precision (quad where available) applied to each
  /// converged root; 0 disables the stage.
  int refine_steps = 80;
  double armijo_c = 1e-4;
  /// Converged when |F| < newton_tol_factor * scale, scale = max(1, lambda_N^2, k, |beta| lambda_N).
  double newton_tol_factor = 1e-11;
  /// Deduplication distance, max coefficient difference relative to the start box half-width.
  double dedup_tol = 1e-8;
  /// Coefficients below this magnitude are treated as inactive.
  double active_threshold = 1e-7;
  /// Share of starts placed on coordinate faces of the box (a cycling subset of
  /// at most three modes, the rest exactly zero). The other starts fill the box.
  double face_fraction = 0.5;
  /// 0 uses std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct OracleResult {
  std::vector<ModalSolution> found;  // tag oracle, deduplicated, in discovery order
  int starts_used = 0;
  int converged_count = 0;
  double box_half_width = 0.0;
  double newton_tol = 0.0;
  int truncation = 0;  // N
};

/// Damped Newton on the 2N-dimensional modal system from `starts` uniform
/// starts in [-R, R]^{2N}, R = sqrt(max(1, -beta) / (varrho lambda_1)).
/// A share of the starts is drawn on coordinate faces, see OracleOptions.
/// Deterministic for a given seed regardless of the thread count.
OracleResult galerkin_solve(const Params& p, const Spectrum& spec, int modes, int starts,
                            std::uint64_t seed, const OracleOptions& opts = {});

/// Value of the 2N modal map at z = (alpha_1..alpha_N, gamma_1..gamma_N).
std::vector<double> modal_map(const Params& p, const Spectrum& spec, const std::vector<double>& z);

enum class MatchClass { Matched, OnFamily, Unmatched };

struct MatchEntry {
  MatchClass cls = MatchClass::Unmatched;
  int closed_index = -1;  // index into the closed-form list when Matched
  int family_index = -1;  // index into the family list when OnFamily
};

struct MatchReport {
  std::vector<MatchEntry> entries;  // one per oracle root
  int matched = 0;
  int on_family = 0;
  std::vector<ModalSolution> unmatched;
  /// Closed-form solutions hit by at least one oracle root.
  std::vector<bool> closed_hit;
  int closed_hit_count = 0;
};

/// Classifies each oracle root as matching an isolated closed-form solution
/// (same active modes, every coefficient within tol * max(1, |c|)), lying on an
/// EE family (same modes, sign pattern and quadric within tol), or unmatched.
MatchReport match_against(const std::vector<ModalSolution>& closed,
                          const std::vector<EEFamily>& families,
                          const std::vector<ModalSolution>& oracle_found, double tol = 1e-6);

}  // namespace beamforge
