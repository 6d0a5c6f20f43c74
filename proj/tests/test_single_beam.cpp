#include <doctest.h>

#include <cmath>
#include <numbers>

#include "beamforge/single_beam.hpp"
#include "support.hpp"

using namespace beamforge;

constexpr double pi2 = std::numbers::pi * std::numbers::pi;

TEST_CASE("plain model on the dirichlet spectrum") {
  const Params p{-50.0, 1.0, 1.0};
  const auto spec = Spectrum::dirichlet();
  const auto set = enumerate_plain(p, spec);
  REQUIRE(set.unimodal.size() == 4);
  CHECK(set.bimodal_families.empty());
  CHECK(set.unimodal[0].amplitude == doctest::Approx(std::sqrt((50 - pi2) / pi2)));
  CHECK(set.unimodal[0].amplitude == doctest::Approx(2.0163).epsilon(1e-4));
  CHECK(set.unimodal[1].amplitude == -set.unimodal[0].amplitude);
  CHECK(set.unimodal[2].amplitude == doctest::Approx(0.5161).epsilon(1e-3));
  for (const auto& m : set.unimodal) {
    const double l = spec(m.n);
    CHECK(m.amplitude * m.amplitude == doctest::Approx((-p.beta - l) / (p.varrho * l)).epsilon(1e-15));
    const double r = l * l * m.amplitude + (p.beta + p.varrho * l * m.amplitude * m.amplitude) * l * m.amplitude;
    CHECK(std::abs(r) < 1e-10 * l * l * std::abs(m.amplitude));
    CHECK(single_beam_residual(SingleBeamModel::Plain, {{m.n, m.amplitude}}, p, spec) < 1e-10);
  }
  CHECK(enumerate_plain({-pi2, 1.0, 1.0}, spec).unimodal.empty());
}

TEST_CASE("plain count is twice |E|") {
  const auto spec = Spectrum::scaled(20);
  for (double k : {1.0, 3.0, 10.0}) {
    for (int b = 1; b <= 200; ++b) {
      const Params p{-static_cast<double>(b), 1.0, k};
      CHECK(enumerate_plain(p, spec).unimodal.size() == 2 * ref::effective(p.beta, spec).size());
    }
  }
}

TEST_CASE("foundation model") {
  const auto spec = Spectrum::scaled(20);
  const Params p{-15.5, 1.0, 3.0};
  const auto set = enumerate_foundation(p, spec);
  REQUIRE_FALSE(set.unimodal.empty());
  CHECK(set.unimodal[0].n == 1);
  CHECK(ref::abs_close(set.unimodal[0].amplitude, std::sqrt(11.5), 1e-12));
  CHECK(set.unimodal[0].amplitude == doctest::Approx(3.39116).epsilon(1e-5));
  for (const auto& m : set.unimodal) {
    CHECK(single_beam_residual(SingleBeamModel::Foundation, {{m.n, m.amplitude}}, p, spec) < 1e-10);
  }
  CHECK(set.bimodal_families.empty());

  const auto g = enumerate_foundation({-10.0, 1.0, 4.0}, spec);
  REQUIRE(g.bimodal_families.size() == 1);
  CHECK(g.bimodal_families[0].n1 == 1);
  CHECK(g.bimodal_families[0].n2 == 2);
  CHECK(g.bimodal_families[0].coeffs == std::vector<double>{1.0, 4.0});
  CHECK(g.bimodal_families[0].constant == -5.0);
  // (1, 1) on x^2 + 4y^2 = 5 solves the foundation model
  CHECK(single_beam_residual(SingleBeamModel::Foundation, {{1, 1.0}, {2, 1.0}}, {-10.0, 1.0, 4.0},
                             spec) < 1e-12);
}

TEST_CASE("foundation tends to plain as k vanishes") {
  const auto spec = Spectrum::scaled(20);
  const Params p{-40.0, 1.0, 1e-8};
  const auto a = enumerate_plain(p, spec);
  const auto b = enumerate_foundation(p, spec);
  REQUIRE(a.unimodal.size() == b.unimodal.size());
  for (std::size_t i = 0; i < a.unimodal.size(); ++i) {
    CHECK(std::abs(a.unimodal[i].amplitude - b.unimodal[i].amplitude) < 1e-3);
  }
}
