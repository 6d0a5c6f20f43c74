#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "beamforge/errors.hpp"
#include "beamforge/inventory.hpp"
#include "beamforge/json_io.hpp"
#include "beamforge/sweep.hpp"
#include "support.hpp"

using namespace beamforge;

namespace {
const Spectrum kScaled = Spectrum::scaled(20);
}

TEST_CASE("inventory counts") {
  const auto inv = build_inventory({-15.5, 1.0, 3.0}, kScaled);
  CHECK(inv.counts.unimodal == 24);
  CHECK(inv.counts.ee_families == 0);
  // pairs (1,3) and (2,3) qualify alongside (1,2)
  CHECK(inv.counts.general_bimodal == 24);
  CHECK(inv.verified());
  CHECK(inv.max_residual < 1e-10);

  const auto restricted =
      build_inventory({-15.5, 1.0, 3.0}, kScaled, {.only_pair = std::pair{1, 2}});
  CHECK(restricted.counts.general_bimodal == 8);

  const auto zero = build_inventory({0.0, 1.0, 3.0}, kScaled);
  CHECK(zero.counts.unimodal == 0);
  CHECK(zero.counts.ee_families == 0);
  CHECK(zero.counts.general_bimodal == 0);
  REQUIRE_FALSE(zero.notes.empty());
  CHECK(zero.notes[0] == "E empty");

  const auto b1 = build_inventory({-10.0, 1.0, 2.0}, kScaled, {.samples_per_family = 100});
  bool found = false;
  for (const auto& f : b1.families) found |= f.kind == FamilyKind::B1 && f.modes == std::vector<int>{1, 2};
  CHECK(found);
  CHECK(b1.verified());
  CHECK(b1.family_samples[0].size() == 100);
}

TEST_CASE("tag-blind verifier") {
  const Params p{-15.5, 1.0, 3.0};
  ModalSolution s;
  s.modes[1] = {std::sqrt(14.5), std::sqrt(14.5)};
  s.tag = BranchTag::parse("general-bimodal(YZ)");
  CHECK(verify_solution(s, p, kScaled).pass);
  s.modes[1].alpha += 1e-3;
  s.tag = BranchTag::parse("unimodal(1,+)");
  CHECK_FALSE(verify_solution(s, p, kScaled).pass);
}

TEST_CASE("json numbers use 17 significant digits") {
  const json j = {{"x", 0.1}, {"n", 3}, {"bad", std::nan("")}, {"s", "a\"b"}};
  const auto text = dump(j, -1);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(text.find("\"n\":3") != std::string::npos);
  CHECK(text.find("\"bad\":null") != std::string::npos);
  CHECK(text.find("a\\\"b") != std::string::npos);
  CHECK(json::parse(dump(j))["x"].get<double>() == 0.1);
}

TEST_CASE("solution json round trip") {
  const Params p{-15.5, 1.0, 3.0};
  const auto inv = build_inventory(p, kScaled);
  for (const auto& s : inv.general_bimodal) {
    const auto back = solution_from_json(json::parse(dump(to_json(s, p, kScaled))));
    CHECK(back.tag.str() == s.tag.str());
    for (const auto& [n, c] : s.modes) {
      CHECK(back.modes.at(n).alpha == c.alpha);
      CHECK(back.modes.at(n).gamma == c.gamma);
    }
  }
  CHECK_THROWS_AS(solution_from_json(json::parse(R"({"modes":[{"n":1}]})")), ValidationError);
}

TEST_CASE("inventory json is deterministic") {
  const Params p{-10.0, 1.0, 2.0};
  const InventoryOptions o{.samples_per_family = 5, .seed = 3};
  const auto a = dump(to_json(build_inventory(p, kScaled, o), kScaled));
  const auto b = dump(to_json(build_inventory(p, kScaled, o), kScaled));
  CHECK(a == b);
  const auto j = json::parse(a);
  CHECK(j["counts"]["ee_families"].get<int>() >= 1);
  CHECK(j["verification"]["passed"].get<bool>());
}

TEST_CASE("sweep branch births") {
  SweepOptions o;
  o.load_from = 0.0;
  o.load_to = 20.0;
  o.steps = 201;
  o.modes = {1};
  const auto rows = sweep({0.0, 1.0, 3.0}, kScaled, o);
  std::map<int, double> last_absent, first_present;
  std::map<double, std::map<int, bool>> present;
  for (const auto& r : rows) {
    if (r.branch_id == "summary") {
      present[-r.beta];
      continue;
    }
    const int branch = r.branch_id[8] - '0';
    present[-r.beta][branch] = true;
  }
  for (int i = 1; i <= 4; ++i) {
    double first = -1.0, absent = -1.0;
    for (const auto& [load, br] : present) {
      if (br.contains(i)) {
        if (first < 0) first = load;
      } else if (first < 0) {
        absent = load;
      }
    }
    first_present[i] = first;
    last_absent[i] = absent;
  }
  // boundary loads 1, 7, 10 are on the grid and still belong to the lower class
  CHECK(last_absent[1] == 1.0);
  CHECK(last_absent[2] == 7.0);
  CHECK(last_absent[3] == 10.0);
  CHECK(last_absent[4] == 10.0);
  for (int i = 1; i <= 4; ++i) {
    CHECK(first_present[i] > last_absent[i]);
    CHECK(first_present[i] < last_absent[i] + 0.1 + 1e-12);
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK((rows[i - 1].beta < rows[i].beta ||
           (rows[i - 1].beta == rows[i].beta && rows[i - 1].branch_id < rows[i].branch_id)));
  }
}

TEST_CASE("empty grid gives the header only") {
  std::ostringstream os;
  write_sweep_csv(os, sweep({0.0, 1.0, 3.0}, kScaled, SweepOptions{}));
  const auto text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);
  CHECK(text.rfind("beta,branch_id,", 0) == 0);
}

TEST_CASE("dirichlet sweep of |E|") {
  SweepOptions o;
  o.load_from = 0.0;
  o.load_to = 2000.0;
  o.steps = 4001;
  const auto rows = sweep({0.0, 1.0, 1.0}, Spectrum::dirichlet(), o);
  for (const auto& r : rows) {
    CHECK(r.card_e == dirichlet_effective_count(r.beta));
    if (r.beta < 0.0) {
      CHECK(r.card_e == static_cast<int>(std::ceil(std::sqrt(-r.beta / (M_PI * M_PI)))) - 1);
    }
  }
}

TEST_CASE("sweep tracks pairs and writes a plot script") {
  SweepOptions o;
  o.load_from = 14.0;
  o.load_to = 17.0;
  o.steps = 7;
  o.pairs = {{1, 2}};
  const auto rows = sweep({0.0, 1.0, 3.0}, kScaled, o);
  int at_worked = 0;
  for (const auto& r : rows) {
    if (r.beta == -15.5 && r.branch_id.rfind("gb:1-2", 0) == 0) ++at_worked;
  }
  CHECK(at_worked == 8);
  std::ostringstream csv, plot;
  write_sweep_csv(csv, rows);
  write_gnuplot_script(plot, "sweep.csv", rows);
  CHECK(plot.str().find("gb:1-2:XW") != std::string::npos);
  std::ostringstream again;
  write_sweep_csv(again, sweep({0.0, 1.0, 3.0}, kScaled, o));
  CHECK(again.str() == csv.str());
}

TEST_CASE("profiles") {
  ModalSolution s;
  s.modes[1] = {1.0, -1.0};
  const auto u = profile(s, true, 3);
  CHECK(std::abs(u[0]) < 1e-15);
  CHECK(u[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(profile(s, false, 3)[1] == doctest::Approx(-std::sqrt(2.0)));
  CHECK_THROWS_AS(profile(s, true, 1), ValidationError);
}
