#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beamforge/bimodal.hpp"
#include "beamforge/ee_families.hpp"
#include "beamforge/mode_sets.hpp"
#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace beamforge {

inline constexpr double kDefaultResidualTol = 1e-10;
inline constexpr double kDefaultCubicTol = 1e-9;

/// Tag-blind check of one solution against the modal system.
struct Verdict {
  bool structure_ok = true;
  double residual = 0.0;  // relative modal residual
  double cubic = 0.0;     // largest relative |P(lambda_n)| over active modes
  bool pass = false;
};

Verdict verify_solution(const ModalSolution& sol, const Params& p, const Spectrum& spec,
                        double residual_tol = kDefaultResidualTol,
                        double cubic_tol = kDefaultCubicTol);

struct InventoryOptions {
  double tol_cond = kDefaultConditionTol;
  double tol_res = kDefaultResidualTol;
  int samples_per_family = 0;
  std::uint64_t seed = 1;
  std::optional<std::pair<int, int>> only_pair;  // restricts the general-bimodal scan
};

struct InventoryCounts {
  int unimodal = 0;
  int ee_families = 0;
  int general_bimodal = 0;
};

struct Inventory {
  Params params;
  std::string spectrum;
  ModeSetPartition partition;
  std::vector<ModalSolution> unimodal;
  std::vector<EEFamily> families;
  std::vector<std::vector<ModalSolution>> family_samples;  // parallel to families
  std::vector<ModalSolution> general_bimodal;
  InventoryCounts counts;
  double max_residual = 0.0;  // over isolated solutions and samples
  double max_cubic = 0.0;
  int failures = 0;
  std::vector<std::string> notes;

  bool verified() const { return failures == 0; }
};

/// Full closed-form enumeration plus the tag-blind verification block.
Inventory build_inventory(const Params& p, const Spectrum& spec, const InventoryOptions& opts = {});

/// Trivial + unimodal + general bimodal: every isolated stationary state.
std::vector<ModalSolution> isolated_solutions(const Inventory& inv);

}  // namespace beamforge
