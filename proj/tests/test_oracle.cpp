#include <doctest.h>

#include <cmath>

#include "beamforge/inventory.hpp"
#include "beamforge/oracle.hpp"
#include "support.hpp"

using namespace beamforge;

namespace {
const Spectrum kScaled = Spectrum::scaled(20);

std::vector<ModalSolution> unimodal_and_trivial(const Inventory& inv) {
  std::vector<ModalSolution> out{ModalSolution{}};
  out.insert(out.end(), inv.unimodal.begin(), inv.unimodal.end());
  return out;
}
}  // namespace

TEST_CASE("modal map vanishes on closed forms") {
  const Params p{-15.5, 1.0, 3.0};
  const auto inv = build_inventory(p, kScaled);
  for (const auto& s : isolated_solutions(inv)) {
    std::vector<double> z(6, 0.0);
    for (const auto& [n, c] : s.modes) {
      z[n - 1] = c.alpha;
      z[3 + n - 1] = c.gamma;
    }
    double worst = 0.0;
    for (double f : modal_map(p, kScaled, z)) worst = std::max(worst, std::abs(f));
    CHECK(worst < 1e-10 * 81.0);
  }
}

TEST_CASE("completeness on the unimodal inventory") {
  const Params p{-15.5, 1.0, 3.0};
  const auto inv = build_inventory(p, kScaled);
  const auto res = galerkin_solve(p, kScaled, 3, 2000, 1);
  const auto report = match_against(isolated_solutions(inv), inv.families, res.found);
  CHECK(report.unmatched.empty());
  int hit = 0;
  for (std::size_t i = 0; i <= inv.unimodal.size(); ++i) hit += report.closed_hit[i];
  CHECK(hit == 25);
  for (const auto& s : res.found) {
    CHECK(s.active_count() <= 3);
    CHECK(modal_residual(s, p, kScaled).max_abs < res.newton_tol);
  }
  // matching against a partial list leaves the bimodal roots unmatched
  const auto partial = match_against(unimodal_and_trivial(inv), {}, res.found);
  CHECK(partial.matched == 25);
}

TEST_CASE("only the trivial state below the first eigenvalue") {
  const auto res = galerkin_solve({-0.5, 1.0, 3.0}, kScaled, 4, 500, 2);
  REQUIRE(res.found.size() == 1);
  CHECK(res.found[0].is_trivial());
}

TEST_CASE("deterministic across thread counts") {
  const Params p{-15.5, 1.0, 3.0};
  OracleOptions one;
  one.threads = 1;
  OracleOptions many;
  many.threads = 4;
  const auto a = galerkin_solve(p, kScaled, 3, 300, 9, one);
  const auto b = galerkin_solve(p, kScaled, 3, 300, 9, many);
  REQUIRE(a.found.size() == b.found.size());
  for (std::size_t i = 0; i < a.found.size(); ++i) {
    CHECK(a.found[i].modes.size() == b.found[i].modes.size());
    for (const auto& [n, c] : a.found[i].modes) {
      CHECK(b.found[i].modes.at(n).alpha == c.alpha);
      CHECK(b.found[i].modes.at(n).gamma == c.gamma);
    }
  }
}

TEST_CASE("roots on a B1 family are classified on-family") {
  const Params p{-10.0, 1.0, 2.0};
  const auto inv = build_inventory(p, kScaled, {.only_pair = std::pair{1, 2}});
  const auto res = galerkin_solve(p, kScaled, 2, 1000, 4);
  const auto report = match_against(isolated_solutions(inv), inv.families, res.found);
  CHECK(report.unmatched.empty());
  CHECK(report.on_family > 0);
  for (std::size_t i = 0; i < res.found.size(); ++i) {
    if (res.found[i].active_count() == 2) {
      CHECK(report.entries[i].cls == MatchClass::OnFamily);
      const auto& c1 = res.found[i].modes.at(1);
      const auto& c2 = res.found[i].modes.at(2);
      CHECK(std::abs(c1.alpha * c1.alpha + 4 * c2.alpha * c2.alpha - 5.0) < 1e-6);
    }
  }
}

TEST_CASE("empty oracle list") {
  const auto report = match_against({ModalSolution{}}, {}, {});
  CHECK(report.matched == 0);
  CHECK(report.on_family == 0);
  CHECK(report.unmatched.empty());
  CHECK(report.closed_hit_count == 0);
}

TEST_CASE("argument errors") {
  CHECK_THROWS(galerkin_solve({-1.0, 1.0, 1.0}, kScaled, 0, 10, 1));
  CHECK_THROWS(galerkin_solve({-1.0, 1.0, 1.0}, kScaled, 30, 10, 1));
  CHECK_THROWS(galerkin_solve({-1.0, 1.0, 1.0}, kScaled, 2, 0, 1));
}
