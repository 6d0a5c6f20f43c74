#include "beamforge/inventory.hpp"

#include <algorithm>

#include "beamforge/errors.hpp"
#include "beamforge/unimodal.hpp"

namespace beamforge {

Verdict verify_solution(const ModalSolution& sol, const Params& p, const Spectrum& spec,
                        double residual_tol, double cubic_tol) {
  Verdict v;
  try {
    validate_structure(sol);
  } catch (const ValidationError&) {
    v.structure_ok = false;
  }
  v.residual = modal_residual(sol, p, spec).relative;
  if (!sol.is_trivial()) v.cubic = cubic_check(sol, p, spec).max_relative;
  v.pass = v.structure_ok && v.residual < residual_tol && v.cubic < cubic_tol;
  return v;
}

Inventory build_inventory(const Params& p, const Spectrum& spec, const InventoryOptions& opts) {
  p.validate();
  Inventory inv;
  inv.params = p;
  inv.spectrum = spec.describe();
  inv.partition = effective_modes(p, spec);
  inv.unimodal = enumerate_unimodal(p, spec);
  inv.families = enumerate_ee_families(p, spec, opts.tol_cond);
  inv.general_bimodal = enumerate_general_bimodal(p, spec, opts.only_pair);

  for (std::size_t i = 0; i < inv.families.size(); ++i) {
    inv.family_samples.push_back(
        opts.samples_per_family > 0
            ? sample_family(inv.families[i], opts.samples_per_family, opts.seed + i)
            : std::vector<ModalSolution>{});
  }

  inv.counts = {static_cast<int>(inv.unimodal.size()), static_cast<int>(inv.families.size()),
                static_cast<int>(inv.general_bimodal.size())};

  auto check = [&](const ModalSolution& sol) {
    const Verdict v = verify_solution(sol, p, spec, opts.tol_res);
    inv.max_residual = std::max(inv.max_residual, v.residual);
    inv.max_cubic = std::max(inv.max_cubic, v.cubic);
    if (!v.pass) ++inv.failures;
  };
  for (const auto& s : inv.unimodal) check(s);
  for (const auto& s : inv.general_bimodal) check(s);
  for (const auto& samples : inv.family_samples) {
    for (const auto& s : samples) check(s);
  }

  if (inv.partition.E.empty()) inv.notes.emplace_back("E empty");
  if (inv.partition.truncated) {
    inv.notes.push_back("scan truncated at n_max = " + std::to_string(inv.partition.n_max_used));
  }
  return inv;
}

std::vector<ModalSolution> isolated_solutions(const Inventory& inv) {
  std::vector<ModalSolution> out;
  out.reserve(1 + inv.unimodal.size() + inv.general_bimodal.size());
  out.push_back(ModalSolution{});
  out.insert(out.end(), inv.unimodal.begin(), inv.unimodal.end());
  out.insert(out.end(), inv.general_bimodal.begin(), inv.general_bimodal.end());
  return out;
}

}  // namespace beamforge
