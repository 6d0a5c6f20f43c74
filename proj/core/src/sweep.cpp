#include "beamforge/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <set>

#include "beamforge/bimodal.hpp"
#include "beamforge/ee_families.hpp"
#include "beamforge/errors.hpp"
#include "beamforge/mode_sets.hpp"
#include "beamforge/unimodal.hpp"

namespace beamforge {

std::vector<double> sweep_grid(const Params& base, const Spectrum& spec, const SweepOptions& opts) {
  if (opts.steps < 0) throw ValidationError("sweep: negative step count");
  std::vector<double> grid;
  if (opts.steps == 0) return grid;
  if (!(opts.load_to >= opts.load_from)) throw ValidationError("sweep: grid must be increasing");
  if (opts.steps == 1) {
    grid.push_back(opts.load_from);
  } else {
    const double h = (opts.load_to - opts.load_from) / (opts.steps - 1);
    for (int i = 0; i < opts.steps; ++i) grid.push_back(opts.load_from + h * i);
    grid.back() = opts.load_to;
  }
  if (opts.include_boundaries) {
    for (int n : opts.modes) {
      const double l = spec.eigenvalue(n);
      for (double b : {l, mu_threshold(l, base.k), nu_threshold(l, base.k)}) {
        if (b >= opts.load_from && b <= opts.load_to) grid.push_back(b);
      }
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

std::string sign_char(double x) { return x < 0.0 ? "-" : "+"; }

}  // namespace

std::vector<SweepRow> sweep(const Params& base, const Spectrum& spec, const SweepOptions& opts,
                            double tol_cond) {
  base.validate();
  for (int n : opts.modes) {
    if (!spec.contains(n)) throw ValidationError("sweep: tracked mode outside the spectrum");
  }
  for (auto [a, b] : opts.pairs) {
    if (!(a >= 1 && a < b && spec.contains(b))) throw ValidationError("sweep: bad tracked pair");
  }

  std::vector<SweepRow> rows;
  for (double load : sweep_grid(base, spec, opts)) {
    Params p = base;
    p.beta = -load;
    const auto part = effective_modes(p, spec);

    SweepRow summary;
    summary.beta = p.beta;
    summary.branch_id = "summary";
    summary.card_e = static_cast<int>(part.E.size());
    summary.count_unimodal =
        2 * static_cast<int>(part.E1.size() + 2 * part.E2.size() + 4 * part.E3.size());
    summary.count_ee_families = static_cast<int>(enumerate_ee_families(p, spec, tol_cond).size());
    summary.count_general_bimodal = 8 * static_cast<int>(scan_general_bimodal(p, spec).size());

    std::vector<SweepRow> batch;
    for (int n : opts.modes) {
      const auto set = u_amplitudes(p, spec, n);
      for (const auto& a : set.entries) {
        SweepRow r = summary;
        r.branch_id = "u:n=" + std::to_string(n) + ":i=" + std::to_string(a.branch) + ":" +
                      (a.sign > 0 ? "+" : "-");
        r.indices = {n};
        r.coefficients = {a.value, paired_gamma(set, a)};
        batch.push_back(std::move(r));
      }
    }
    for (auto [a, b] : opts.pairs) {
      for (const auto& sol : enumerate_general_bimodal(p, spec, std::pair{a, b})) {
        const auto& c1 = sol.modes.at(a);
        const auto& c2 = sol.modes.at(b);
        SweepRow r = summary;
        r.branch_id = "gb:" + std::to_string(a) + "-" + std::to_string(b) + ":" + sol.tag.detail +
                      ":" + sign_char(c1.alpha) + sign_char(c2.alpha);
        r.indices = {a, b};
        r.coefficients = {c1.alpha, c1.gamma, c2.alpha, c2.gamma};
        batch.push_back(std::move(r));
      }
    }
    batch.push_back(std::move(summary));
    std::sort(batch.begin(), batch.end(),
              [](const SweepRow& x, const SweepRow& y) { return x.branch_id < y.branch_id; });
    for (auto& r : batch) rows.push_back(std::move(r));
  }
  // the grid is ascending in -beta; rows go by ascending beta
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& x, const SweepRow& y) { return x.beta < y.beta; });
  return rows;
}

namespace {

void put_real(std::ostream& os, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  os << buf;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "beta,branch_id,n1,n2,alpha1,gamma1,alpha2,gamma2,"
        "count_unimodal,count_ee_families,count_general_bimodal,card_E\n";
  for (const auto& r : rows) {
    put_real(os, r.beta);
    os << ',' << r.branch_id;
    for (std::size_t i = 0; i < 2; ++i) {
      os << ',';
      if (i < r.indices.size()) os << r.indices[i];
    }
    for (std::size_t i = 0; i < 4; ++i) {
      os << ',';
      if (i < r.coefficients.size()) put_real(os, r.coefficients[i]);
    }
    os << ',' << r.count_unimodal << ',' << r.count_ee_families << ','
       << r.count_general_bimodal << ',' << r.card_e << '\n';
  }
}

void write_gnuplot_script(std::ostream& os, const std::string& csv_path,
                          const std::vector<SweepRow>& rows) {
  std::set<std::string> branches;
  for (const auto& r : rows) {
    if (r.branch_id != "summary") branches.insert(r.branch_id);
  }
  os << "set datafile separator ','\n"
     << "set xlabel '-beta'\n"
     << "set ylabel 'alpha'\n"
     << "set key outside right\n";
  if (branches.empty()) {
    os << "plot \"< grep ',summary,' '" << csv_path << "'\" using (-$1):12 with steps title '|E|'\n";
    return;
  }
  os << "plot ";
  bool first = true;
  for (const auto& b : branches) {
    if (!first) os << ", \\\n     ";
    first = false;
    os << "\"< grep '," << b << ",' '" << csv_path << "'\" using (-$1):5 with linespoints title '"
       << b << "'";
  }
  os << '\n';
}

std::vector<double> profile(const ModalSolution& sol, bool of_u, int points) {
  if (points < 2) throw ValidationError("profile: need at least two points");
  std::vector<double> out(static_cast<std::size_t>(points), 0.0);
  for (int i = 0; i < points; ++i) {
    const double x = static_cast<double>(i) / (points - 1);
    double acc = 0.0;
    for (const auto& [n, c] : sol.modes) {
      acc += (of_u ? c.alpha : c.gamma) * std::numbers::sqrt2 * std::sin(n * std::numbers::pi * x);
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

}  // namespace beamforge
