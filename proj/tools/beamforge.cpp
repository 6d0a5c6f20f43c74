#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "beamforge/bimodal.hpp"
#include "beamforge/convert.hpp"
#include "beamforge/ee_families.hpp"
#include "beamforge/errors.hpp"
#include "beamforge/inventory.hpp"
#include "beamforge/json_io.hpp"
#include "beamforge/mode_sets.hpp"
#include "beamforge/oracle.hpp"
#include "beamforge/single_beam.hpp"
#include "beamforge/sweep.hpp"
#include "beamforge/unimodal.hpp"

namespace bf = beamforge;
using bf::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

struct Globals {
  double beta = 0.0;
  double varrho = 1.0;
  double k = 1.0;
  std::string spectrum = "scaled";
  int nmax = bf::Spectrum::kDefaultNMax;
  double tol_cond = bf::kDefaultConditionTol;
  double tol_res = bf::kDefaultResidualTol;
  std::uint64_t seed = 1;
  bool json = false;
  bool csv = false;
  std::string out;

  bf::Params params() const {
    bf::Params p{beta, varrho, k};
    p.validate();
    return p;
  }
  bf::Spectrum spec() const {
    if (nmax < 1) throw bf::ValidationError("--nmax must be positive");
    return bf::Spectrum::parse(spectrum, nmax);
  }
};

std::pair<int, int> parse_pair(const std::string& text) {
  const auto cut = text.find_first_of(",-:");
  if (cut == std::string::npos) throw bf::ValidationError("pair '" + text + "' is not n1,n2");
  try {
    std::size_t used = 0;
    const int a = std::stoi(text.substr(0, cut), &used);
    const std::string rest = text.substr(cut + 1);
    std::size_t used2 = 0;
    const int b = std::stoi(rest, &used2);
    if (used != cut || used2 != rest.size()) throw std::invalid_argument(text);
    if (!(a >= 1 && a < b)) throw bf::ValidationError("pair '" + text + "' needs 1 <= n1 < n2");
    return {a, b};
  } catch (const std::logic_error&) {
    throw bf::ValidationError("pair '" + text + "' is not n1,n2");
  }
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& items) {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : items) out.push_back(parse_pair(s));
  return out;
}

// --out or stdout
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw bf::ValidationError("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

void reject_csv(const Globals& g, const char* cmd) {
  if (g.csv) throw bf::ValidationError(std::string(cmd) + ": CSV output is only for sweep rows");
}

json sweep_rows_json(const std::vector<bf::SweepRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    a.push_back({{"beta", r.beta},
                 {"branch_id", r.branch_id},
                 {"indices", r.indices},
                 {"coefficients", r.coefficients},
                 {"count_unimodal", r.count_unimodal},
                 {"count_ee_families", r.count_ee_families},
                 {"count_general_bimodal", r.count_general_bimodal},
                 {"card_E", r.card_e}});
  }
  return a;
}

int cmd_sets(const Globals& g) {
  reject_csv(g, "sets");
  const auto p = g.params();
  const auto spec = g.spec();
  json b1 = json::array(), b2 = json::array(), t = json::array(), star = json::array();
  for (const auto& m : bf::scan_ee_bimodal(p, spec, g.tol_cond)) {
    (m.kind == bf::EEPairKind::B1 ? b1 : b2).push_back({m.n1, m.n2});
  }
  for (const auto& m : bf::scan_ee_trimodal(p, spec, g.tol_cond)) t.push_back({m.n1, m.n2, m.n3});
  for (const auto& m : bf::scan_general_bimodal(p, spec)) {
    star.push_back({{"modes", {m.n1, m.n2}},
                    {"set", m.set == bf::StarSet::BStar1 ? "B*1" : "B*2"}});
  }
  json doc = {{"params", bf::to_json(p)},
              {"spectrum", spec.describe()},
              {"mode_sets", bf::to_json(bf::effective_modes(p, spec))},
              {"B1", b1},
              {"B2", b2},
              {"T", t},
              {"B_star", star}};
  Sink sink(g.out);
  bf::write(sink.stream(), doc);
  return 0;
}

struct UnimodalArgs {
  std::vector<int> modes;
  double from = 0.0, to = 0.0;
  int steps = 0;
};

int cmd_unimodal(const Globals& g, const UnimodalArgs& a) {
  const auto spec = g.spec();
  if (g.csv) {
    // amplitude diagram over -beta; beta itself is ignored
    bf::Params base{0.0, g.varrho, g.k};
    base.validate();
    bf::SweepOptions opts;
    opts.load_from = a.from;
    opts.load_to = a.to;
    opts.steps = a.steps;
    opts.modes = a.modes;
    const auto rows = bf::sweep(base, spec, opts, g.tol_cond);
    Sink sink(g.out);
    bf::write_sweep_csv(sink.stream(), rows);
    return 0;
  }
  const auto p = g.params();
  std::vector<int> modes = a.modes;
  if (modes.empty()) modes = bf::effective_modes(p, spec).E;
  json sets = json::array();
  json sols = json::array();
  double worst = 0.0;
  bool ok = true;
  for (int n : modes) {
    if (!spec.contains(n)) throw bf::ValidationError("mode " + std::to_string(n) + " outside spectrum");
    sets.push_back(bf::to_json(bf::u_amplitudes(p, spec, n)));
  }
  for (const auto& s : bf::enumerate_unimodal(p, spec)) {
    const int n = s.modes.begin()->first;
    if (std::find(modes.begin(), modes.end(), n) == modes.end()) continue;
    const auto v = bf::verify_solution(s, p, spec, g.tol_res);
    worst = std::max(worst, v.residual);
    ok = ok && v.pass;
    sols.push_back(bf::to_json(s, p, spec));
  }
  json doc = {{"params", bf::to_json(p)},
              {"spectrum", spec.describe()},
              {"amplitude_sets", sets},
              {"solutions", sols},
              {"verification", {{"max_residual", worst}, {"passed", ok}}}};
  Sink sink(g.out);
  bf::write(sink.stream(), doc);
  return ok ? 0 : kExitVerification;
}

struct EnumerateArgs {
  int samples = 0;
  std::vector<std::string> pairs;
};

int cmd_enumerate(const Globals& g, const EnumerateArgs& a) {
  reject_csv(g, "enumerate");
  const auto p = g.params();
  const auto spec = g.spec();
  bf::InventoryOptions opts;
  opts.tol_cond = g.tol_cond;
  opts.tol_res = g.tol_res;
  opts.samples_per_family = a.samples;
  opts.seed = g.seed;
  if (a.samples < 0) throw bf::ValidationError("--samples must be non-negative");
  const auto pairs = parse_pairs(a.pairs);
  if (pairs.size() > 1) throw bf::ValidationError("enumerate: --pairs takes a single pair");
  if (!pairs.empty()) opts.only_pair = pairs.front();
  const auto inv = bf::build_inventory(p, spec, opts);
  Sink sink(g.out);
  bf::write(sink.stream(), bf::to_json(inv, spec));
  if (!inv.verified()) {
    std::cerr << "beamforge: " << inv.failures << " solution(s) failed verification (max residual "
              << inv.max_residual << ")\n";
    return kExitVerification;
  }
  return 0;
}

int cmd_single(const Globals& g, const std::string& model) {
  reject_csv(g, "single");
  const auto p = g.params();
  const auto spec = g.spec();
  bf::SingleBeamSolutionSet set;
  bf::SingleBeamModel kind;
  if (model == "plain") {
    set = bf::enumerate_plain(p, spec);
    kind = bf::SingleBeamModel::Plain;
  } else if (model == "foundation") {
    set = bf::enumerate_foundation(p, spec, g.tol_cond);
    kind = bf::SingleBeamModel::Foundation;
  } else {
    throw bf::ValidationError("--model must be plain or foundation");
  }
  double worst = 0.0;
  for (const auto& m : set.unimodal) {
    worst = std::max(worst, bf::single_beam_residual(kind, {{m.n, m.amplitude}}, p, spec));
  }
  json doc = bf::to_json(set);
  doc["params"] = bf::to_json(p);
  doc["spectrum"] = spec.describe();
  doc["verification"] = {{"max_residual", worst}, {"passed", worst <= g.tol_res}};
  Sink sink(g.out);
  bf::write(sink.stream(), doc);
  return worst <= g.tol_res ? 0 : kExitVerification;
}

struct OracleArgs {
  int modes = 3;
  int starts = 2000;
  unsigned threads = 0;
  double match_tol = 1e-6;
};

int cmd_oracle(const Globals& g, const OracleArgs& a) {
  reject_csv(g, "oracle");
  const auto p = g.params();
  const auto spec = g.spec();
  if (a.modes < 1 || !spec.contains(a.modes)) throw bf::ValidationError("--modes outside the spectrum");
  if (a.starts < 1) throw bf::ValidationError("--starts must be positive");
  bf::OracleOptions opts;
  opts.threads = a.threads;
  const auto res = bf::galerkin_solve(p, spec, a.modes, a.starts, g.seed, opts);

  // closed forms on the same truncation
  const auto trunc = bf::Spectrum::parse(g.spectrum, a.modes);
  bf::InventoryOptions iopts;
  iopts.tol_cond = g.tol_cond;
  iopts.tol_res = g.tol_res;
  const auto inv = bf::build_inventory(p, trunc, iopts);
  const auto report = bf::match_against(bf::isolated_solutions(inv), inv.families, res.found, a.match_tol);

  int failures = 0;
  double worst = 0.0;
  for (const auto& s : res.found) {
    const auto v = bf::verify_solution(s, p, spec, g.tol_res);
    worst = std::max(worst, v.residual);
    if (!v.pass) ++failures;
  }
  json doc = bf::to_json(res, report, p, spec);
  doc["verification"] = {{"max_residual", worst}, {"failures", failures}, {"passed", failures == 0}};
  Sink sink(g.out);
  bf::write(sink.stream(), doc);
  return failures == 0 ? 0 : kExitVerification;
}

struct SweepArgs {
  double from = 0.0, to = 0.0;
  int steps = 0;
  std::vector<int> modes;
  std::vector<std::string> pairs;
  bool no_boundaries = false;
  std::string plot;
};

int cmd_sweep(const Globals& g, const SweepArgs& a) {
  bf::Params base{0.0, g.varrho, g.k};
  base.validate();
  const auto spec = g.spec();
  bf::SweepOptions opts;
  opts.load_from = a.from;
  opts.load_to = a.to;
  opts.steps = a.steps;
  opts.modes = a.modes;
  opts.pairs = parse_pairs(a.pairs);
  opts.include_boundaries = !a.no_boundaries;
  const auto rows = bf::sweep(base, spec, opts, g.tol_cond);
  Sink sink(g.out);
  if (g.json) {
    bf::write(sink.stream(), sweep_rows_json(rows));
  } else {
    bf::write_sweep_csv(sink.stream(), rows);
  }
  if (!a.plot.empty()) {
    if (g.out.empty() || g.out == "-" || g.json) {
      throw bf::ValidationError("--plot needs the CSV written with --out <path>");
    }
    std::ofstream script(a.plot);
    if (!script) throw bf::ValidationError("cannot open '" + a.plot + "' for writing");
    bf::write_gnuplot_script(script, g.out, rows);
  }
  return 0;
}

int cmd_convert(const Globals& g, bf::PhysicalParams phys, std::optional<double> rho) {
  reject_csv(g, "convert");
  phys.rho_density = rho;
  const auto res = bf::dimensionless_params(phys);
  Sink sink(g.out);
  bf::write(sink.stream(), bf::to_json(res));
  for (const auto& w : res.diagnostics.warnings) std::cerr << "beamforge: warning: " << w << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form stationary states of the coupled extensible double-beam system"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--beta", g.beta, "Axial load (compression negative)");
  app.add_option("--varrho", g.varrho, "Extensibility, > 0");
  app.add_option("--k", g.k, "Coupling stiffness, > 0");
  app.add_option("--spectrum", g.spectrum, "dirichlet | scaled | power:p | file:<path>")
      ->capture_default_str();
  app.add_option("--nmax", g.nmax, "Spectrum truncation")->capture_default_str();
  app.add_option("--tol-cond", g.tol_cond, "Relative tolerance of equality conditions");
  app.add_option("--tol-res", g.tol_res, "Residual tolerance of the verifier");
  app.add_option("--seed", g.seed, "RNG seed");
  auto* fj = app.add_flag("--json", g.json, "JSON output (default except for sweep)");
  auto* fc = app.add_flag("--csv", g.csv, "CSV output (sweep, unimodal diagram)");
  fj->excludes(fc);
  app.add_option("--out", g.out, "Output file (default stdout)");

  auto* sets = app.add_subcommand("sets", "Mode sets E, E1, E2, E3 and B1, B2, T, B* members");

  UnimodalArgs ua;
  auto* uni = app.add_subcommand("unimodal", "Unimodal amplitudes; --csv gives the amplitude diagram");
  uni->add_option("--modes", ua.modes, "Modes to report (default all of E)")->delimiter(',');
  uni->add_option("--from", ua.from, "Diagram: first -beta");
  uni->add_option("--to", ua.to, "Diagram: last -beta");
  uni->add_option("--steps", ua.steps, "Diagram: grid points");

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Full solution inventory with verification");
  en->add_option("--samples", ea.samples, "Samples emitted per EE family");
  en->add_option("--pairs", ea.pairs, "Restrict the general-bimodal scan to n1,n2");

  std::string model = "plain";
  auto* single = app.add_subcommand("single", "Single-beam reference models");
  single->add_option("--model", model, "plain | foundation")->capture_default_str();

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "Brute-force Galerkin solve and match report");
  orc->add_option("--modes", oa.modes, "Truncation N")->capture_default_str();
  orc->add_option("--starts", oa.starts, "Newton starts")->capture_default_str();
  orc->add_option("--threads", oa.threads, "Worker threads (0 = all cores)");
  orc->add_option("--match-tol", oa.match_tol, "Matching tolerance")->capture_default_str();

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "Branch data over a grid in -beta (CSV)");
  sw->add_option("--from", sa.from, "First -beta");
  sw->add_option("--to", sa.to, "Last -beta");
  sw->add_option("--steps", sa.steps, "Grid points (0 gives a header-only CSV)");
  sw->add_option("--modes", sa.modes, "Tracked modes")->delimiter(',');
  sw->add_option("--pairs", sa.pairs, "Tracked pairs n1,n2 (repeatable)");
  sw->add_flag("--no-boundaries", sa.no_boundaries, "Do not insert lambda, mu, nu grid points");
  sw->add_option("--plot", sa.plot, "Write a gnuplot script for the CSV here");

  bf::PhysicalParams phys;
  std::optional<double> rho;
  auto* cv = app.add_subcommand("convert", "Physical beam data to dimensionless parameters");
  cv->set_help_flag("--help", "Print this help message and exit");
  cv->add_option("--ell", phys.ell, "Length")->required();
  cv->add_option("--h", phys.h, "Thickness")->required();
  cv->add_option("--E", phys.E_mod, "Young modulus")->required();
  cv->add_option("--nu", phys.nu_poisson, "Poisson ratio")->required();
  cv->add_option("--D", phys.D_axial, "Axial end displacement")->required();
  cv->add_option("--kappa", phys.kappa_core, "Core stiffness")->required();
  cv->add_option("--area", phys.omega_area, "Cross-section area")->required();
  cv->add_option("--rho", rho, "Density (characteristic time only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*sets) return cmd_sets(g);
    if (*uni) return cmd_unimodal(g, ua);
    if (*en) return cmd_enumerate(g, ea);
    if (*single) return cmd_single(g, model);
    if (*orc) return cmd_oracle(g, oa);
    if (*sw) return cmd_sweep(g, sa);
    if (*cv) return cmd_convert(g, phys, rho);
  } catch (const bf::ValidationError& e) {
    std::cerr << "beamforge: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "beamforge: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
