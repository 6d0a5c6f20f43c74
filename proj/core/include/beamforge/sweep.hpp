#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "beamforge/solution.hpp"
#include "beamforge/spectrum.hpp"

namespace beamforge {

struct SweepOptions {
  double load_from = 0.0;  // grid over -beta
  double load_to = 0.0;
  int steps = 0;           // number of grid points; 0 gives an empty sweep
  std::vector<int> modes;  // tracked modes for u-amplitude rows
  std::vector<std::pair<int, int>> pairs;  // tracked pairs for general-bimodal rows
  /// Insert -beta = lambda_n, mu_n, nu_n of every tracked mode that falls in range.
  bool include_boundaries = true;
};

struct SweepRow {
  double beta = 0.0;
  std::string branch_id;         // "summary", "u:n=1:i=2:-", "gb:1-2:XW:+-", ...
  std::vector<int> indices;      // n, or (n1, n2)
  std::vector<double> coefficients;  // alpha1, gamma1[, alpha2, gamma2]
  int count_unimodal = 0;
  int count_ee_families = 0;
  int count_general_bimodal = 0;
  int card_e = 0;
};

/// Grid values of -beta (ascending, deduplicated) including boundary values.
std::vector<double> sweep_grid(const Params& base, const Spectrum& spec, const SweepOptions& opts);

/// Branch data across the grid; rows ordered by beta then branch_id.
/// `base` supplies varrho and k, its beta is ignored.
std::vector<SweepRow> sweep(const Params& base, const Spectrum& spec, const SweepOptions& opts,
                            double tol_cond = 1e-9);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// gnuplot script drawing every tracked branch of `csv_path` against -beta.
void write_gnuplot_script(std::ostream& os, const std::string& csv_path,
                          const std::vector<SweepRow>& rows);

/// Pointwise profile u(x) = sum alpha_n sqrt(2) sin(n pi x) on `points` nodes of [0, 1].
std::vector<double> profile(const ModalSolution& sol, bool of_u, int points);

}  // namespace beamforge
