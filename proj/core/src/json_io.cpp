#include "beamforge/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "beamforge/errors.hpp"

namespace beamforge {

namespace {

void newline(std::ostream& os, int indent, int depth) {
  if (indent < 0) return;
  os << '\n' << std::string(static_cast<std::size_t>(indent * depth), ' ');
}

void emit(std::ostream& os, const json& j, int indent, int depth) {
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',';
        first = false;
        newline(os, indent, depth + 1);
        os << json(key).dump() << (indent < 0 ? ":" : ": ");
        emit(os, value, indent, depth + 1);
      }
      newline(os, indent, depth);
      os << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << ',';
        first = false;
        newline(os, indent, depth + 1);
        emit(os, value, indent, depth + 1);
      }
      newline(os, indent, depth);
      os << ']';
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        os << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      os << buf;
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

void write(std::ostream& os, const json& j, int indent) {
  emit(os, j, indent, 0);
  if (indent >= 0) os << '\n';
}

std::string dump(const json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent);
  return os.str();
}

json to_json(const Params& p) { return {{"beta", p.beta}, {"varrho", p.varrho}, {"k", p.k}}; }

json to_json(const ModalSolution& sol, const Params& p, const Spectrum& spec) {
  json modes = json::array();
  for (const auto& [n, c] : sol.modes) {
    modes.push_back({{"n", n}, {"alpha", c.alpha}, {"gamma", c.gamma}});
  }
  const auto ax = axial_coefficients(sol, p, spec);
  return {{"modes", modes}, {"tag", sol.tag.str()}, {"C_u", ax.c_u}, {"C_v", ax.c_v}};
}

json to_json(const EEFamily& fam) {
  return {{"kind", to_string(fam.kind)},
          {"modes", fam.modes},
          {"quadric", {{"coeffs", fam.coeffs}, {"constant", fam.constant}}},
          {"sign_pattern", fam.sign_pattern}};
}

json to_json(const ModeSetPartition& part) {
  return {{"E", part.E},   {"E1", part.E1},
          {"E2", part.E2}, {"E3", part.E3},
          {"n_star", part.n_star}, {"truncated", part.truncated},
          {"n_max_used", part.n_max_used}};
}

json to_json(const UAmplitudeSet& set) {
  json entries = json::array();
  for (const auto& a : set.entries) {
    entries.push_back(
        {{"branch", a.branch}, {"sign", a.sign}, {"alpha", a.value}, {"gamma", paired_gamma(set, a)}});
  }
  return {{"n", set.n}, {"class", to_string(set.mode_class)}, {"amplitudes", entries}};
}

json to_json(const BimodalInvariants& inv) {
  return {{"n1", inv.n1},       {"n2", inv.n2},       {"lambda1", inv.lambda1},
          {"lambda2", inv.lambda2}, {"zeta", inv.zeta}, {"sigma", inv.sigma},
          {"Phi", inv.phi},     {"Psi", inv.psi},     {"X", inv.x},
          {"Y", inv.y},         {"W", inv.w},         {"Z", inv.z},
          {"f", inv.f},         {"g", inv.g},         {"m", inv.m_small},
          {"M", inv.m_big},     {"nu_shift", inv.nu_shift},
          {"regime", to_string(inv.regime)}};
}

json to_json(const Inventory& inv, const Spectrum& spec) {
  auto list = [&](const std::vector<ModalSolution>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(to_json(s, inv.params, spec));
    return a;
  };
  json families = json::array();
  for (std::size_t i = 0; i < inv.families.size(); ++i) {
    json f = to_json(inv.families[i]);
    if (!inv.family_samples[i].empty()) f["samples"] = list(inv.family_samples[i]);
    families.push_back(std::move(f));
  }
  return {{"params", to_json(inv.params)},
          {"spectrum", inv.spectrum},
          {"mode_sets", to_json(inv.partition)},
          {"unimodal", list(inv.unimodal)},
          {"ee_families", families},
          {"general_bimodal", list(inv.general_bimodal)},
          {"counts",
           {{"unimodal", inv.counts.unimodal},
            {"ee_families", inv.counts.ee_families},
            {"general_bimodal", inv.counts.general_bimodal}}},
          {"verification",
           {{"max_residual", inv.max_residual},
            {"max_cubic", inv.max_cubic},
            {"failures", inv.failures},
            {"passed", inv.verified()}}},
          {"notes", inv.notes}};
}

json to_json(const OracleResult& res, const MatchReport& report, const Params& p,
             const Spectrum& spec) {
  json found = json::array();
  for (std::size_t i = 0; i < res.found.size(); ++i) {
    json s = to_json(res.found[i], p, spec);
    const auto& e = report.entries.at(i);
    switch (e.cls) {
      case MatchClass::Matched: s["match"] = "matched"; s["closed_index"] = e.closed_index; break;
      case MatchClass::OnFamily: s["match"] = "on-family"; s["family_index"] = e.family_index; break;
      case MatchClass::Unmatched: s["match"] = "unmatched"; break;
    }
    found.push_back(std::move(s));
  }
  json unmatched = json::array();
  for (const auto& s : report.unmatched) unmatched.push_back(to_json(s, p, spec));
  return {{"params", to_json(p)},
          {"spectrum", spec.describe()},
          {"truncation", res.truncation},
          {"starts", res.starts_used},
          {"converged", res.converged_count},
          {"box_half_width", res.box_half_width},
          {"newton_tol", res.newton_tol},
          {"found", found},
          {"report",
           {{"matched", report.matched},
            {"on_family", report.on_family},
            {"unmatched", unmatched},
            {"closed_total", report.closed_hit.size()},
            {"closed_hit", report.closed_hit_count}}}};
}

json to_json(const SingleBeamSolutionSet& set) {
  json uni = json::array();
  for (const auto& m : set.unimodal) uni.push_back({{"n", m.n}, {"amplitude", m.amplitude}});
  json fams = json::array();
  for (const auto& f : set.bimodal_families) {
    fams.push_back({{"modes", {f.n1, f.n2}},
                    {"quadric", {{"coeffs", f.coeffs}, {"constant", f.constant}}}});
  }
  return {{"model", to_string(set.model)}, {"unimodal", uni}, {"bimodal_families", fams}};
}

json to_json(const ConversionResult& res) {
  const auto& d = res.diagnostics;
  json diag = {{"delta", d.delta},
               {"chi", d.chi},
               {"kappa", d.kappa},
               {"slenderness", d.slenderness},
               {"warnings", d.warnings}};
  diag["tau0"] = d.tau0 ? json(*d.tau0) : json(nullptr);
  return {{"params", to_json(res.params)}, {"diagnostics", diag}};
}

ModalSolution solution_from_json(const json& j) {
  try {
    ModalSolution sol;
    for (const auto& m : j.at("modes")) {
      const int n = m.at("n").get<int>();
      if (sol.modes.contains(n)) throw ValidationError("duplicate mode " + std::to_string(n));
      sol.modes[n] = {m.at("alpha").get<double>(), m.at("gamma").get<double>()};
    }
    if (j.contains("tag")) sol.tag = BranchTag::parse(j.at("tag").get<std::string>());
    return sol;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed solution JSON: ") + e.what());
  }
}

}  // namespace beamforge
