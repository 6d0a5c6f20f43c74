#include <doctest.h>

#include <cmath>
#include <random>

#include "beamforge/errors.hpp"
#include "beamforge/solution.hpp"
#include "support.hpp"

using namespace beamforge;

namespace {
const Spectrum kScaled = Spectrum::scaled(20);
const double s3 = std::sqrt(3.0);

// Solution of the (k=3, beta=-31/2) pair (1,2) on the XW branch with its printed amplitudes.
ModalSolution worked_pair_solution() {
  const double x = -2.0 + s3, w = -7.0 + 4.0 * s3;
  // Exact amplitudes from the circle-ellipse system.
  const double f = 3 * s3 - 10, g = -3 * s3 - 10, beta = -15.5;
  // r^2 + 4 t^2 = f - beta, x^2 r^2 + 4 w^2 t^2 = g - beta
  const double a = f - beta, b = g - beta;
  const double t2 = (b - x * x * a) / (4.0 * (w * w - x * x));
  const double r2 = a - 4.0 * t2;
  const double r = -std::sqrt(r2), t = -std::sqrt(t2);
  ModalSolution s;
  s.modes[1] = {r, x * r};
  s.modes[2] = {t, w * t};
  return s;
}
}  // namespace

TEST_CASE("params validation") {
  CHECK_NOTHROW(Params{-1.0, 1.0, 1.0}.validate());
  CHECK_THROWS_AS((Params{0.0, 0.0, 1.0}.validate()), ValidationError);
  CHECK_THROWS_AS((Params{0.0, 1.0, 0.0}.validate()), ValidationError);
  CHECK_THROWS_AS((Params{NAN, 1.0, 1.0}.validate()), ValidationError);
}

TEST_CASE("axial coefficients") {
  const Params p{-15.5, 1.0, 3.0};
  const auto triv = axial_coefficients(ModalSolution{}, p, kScaled);
  CHECK(triv.c_u == p.beta);
  CHECK(triv.c_v == p.beta);

  ModalSolution s;
  s.modes[1] = {std::sqrt(14.5), std::sqrt(14.5)};
  const auto ax = axial_coefficients(s, p, kScaled);
  CHECK(ref::rel_close(ax.c_u, -1.0, 1e-14));
  CHECK(ref::rel_close(ax.c_v, -1.0, 1e-14));

  const auto sol = worked_pair_solution();
  CHECK(sol.modes.at(1).alpha == doctest::Approx(-1.93185).epsilon(1e-5));
  CHECK(sol.modes.at(2).alpha == doctest::Approx(-1.31948).epsilon(1e-5));
  const auto pa = axial_coefficients(sol, p, kScaled);
  CHECK(ref::rel_close(pa.c_u, 3 * s3 - 10, 1e-13));
  CHECK(ref::rel_close(pa.c_v, -3 * s3 - 10, 1e-13));
}

TEST_CASE("modal residual") {
  const Params p{-15.5, 1.0, 3.0};
  CHECK(modal_residual(ModalSolution{}, p, kScaled).max_abs == 0.0);

  ModalSolution s;
  s.modes[1] = {std::sqrt(14.5), std::sqrt(14.5)};
  const auto rep = modal_residual(s, p, kScaled);
  CHECK(rep.max_abs < 1e-10);
  CHECK(rep.relative < 1e-10);
  CHECK(ref::residual(s, p, kScaled) < 1e-14);

  s.modes[1].alpha += 0.1;
  CHECK(modal_residual(s, p, kScaled).max_abs > 0.1);
  // the library and the direct substitution agree on a non-solution
  CHECK(ref::rel_close(modal_residual(s, p, kScaled).relative, ref::residual(s, p, kScaled), 1e-12));

  CHECK(modal_residual(worked_pair_solution(), p, kScaled).relative < 1e-12);
}

TEST_CASE("residual grows with the perturbation") {
  const Params p{-15.5, 1.0, 3.0};
  double last = 0.0;
  for (double eps : {1e-6, 1e-4, 1e-2, 1e-1}) {
    ModalSolution s;
    s.modes[1] = {std::sqrt(14.5) + eps, std::sqrt(14.5)};
    const double r = modal_residual(s, p, kScaled).max_abs;
    CHECK(r > last);
    last = r;
  }
}

TEST_CASE("is_ee") {
  const Params p{-15.5, 1.0, 3.0};
  ModalSolution same;
  same.modes[1] = {0.3, 0.3};
  same.modes[3] = {-1.2, -1.2};
  CHECK(is_ee(same, p, kScaled, 1e-12));
  ModalSolution flip;
  flip.modes[1] = {1.0, -1.0};
  flip.modes[2] = {1.0, -1.0};
  CHECK(is_ee(flip, p, kScaled, 1e-12));
  const auto sol = worked_pair_solution();
  CHECK_FALSE(is_ee(sol, p, kScaled, 1e-6));
  const auto ax = axial_coefficients(sol, p, kScaled);
  CHECK(ref::rel_close(ax.c_u - ax.c_v, 6 * s3, 1e-12));
}

TEST_CASE("cubic check") {
  const Params p{-15.5, 1.0, 3.0};
  ModalSolution s;
  s.modes[1] = {std::sqrt(14.5), std::sqrt(14.5)};
  const auto rep = cubic_check(s, p, kScaled);
  CHECK(rep.ee);
  REQUIRE(rep.points.size() == 1);
  CHECK(std::abs(rep.points[0].value) < 1e-9);
  CHECK(rep.factorization_gap < 1e-12);
  CHECK(cubic_check(worked_pair_solution(), p, kScaled).max_relative < 1e-12);

  CHECK_THROWS_AS(cubic_check(ModalSolution{}, p, kScaled), ValidationError);

  // generic coefficients are not solutions
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    ModalSolution r;
    r.modes[1] = {u(rng), u(rng)};
    r.modes[2] = {u(rng), u(rng)};
    CHECK(cubic_check(r, p, kScaled).max_relative > 1e-9);
  }
}

TEST_CASE("cubic forms agree on EE coefficients") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-20.0, 20.0), pos(0.1, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = u(rng), k = pos(rng), l = pos(rng);
    const double factored = (l + c) * (l * l + c * l + 2 * k);
    CHECK(ref::rel_close(cubic_p(l, c, c, k), factored, 1e-12));
  }
}

TEST_CASE("relation between lambda and the axial coefficients") {
  const Params p{-15.5, 1.0, 3.0};
  const auto sol = worked_pair_solution();
  const auto ax = axial_coefficients(sol, p, kScaled);
  for (const auto& [n, c] : sol.modes) {
    const double lam = -(ax.c_u * c.alpha + ax.c_v * c.gamma) / (c.alpha + c.gamma);
    CHECK(ref::rel_close(lam, kScaled(n), 1e-9));
  }
}

TEST_CASE("structure validation") {
  ModalSolution four;
  for (int n = 1; n <= 4; ++n) four.modes[n] = {1.0, 1.0};
  CHECK_THROWS_AS(validate_structure(four), ValidationError);
  four.modes[4] = {0.0, 0.0};
  CHECK_NOTHROW(validate_structure(four));
  CHECK(four.active_count() == 3);
  ModalSolution half;
  half.modes[2] = {1.0, 0.0};
  CHECK_THROWS_AS(validate_structure(half), ValidationError);
}

TEST_CASE("branch tags round trip") {
  for (const char* t : {"trivial", "unimodal(3,+)", "ee-bimodal(B1)", "ee-trimodal",
                        "general-bimodal(XW)", "oracle"}) {
    CHECK(BranchTag::parse(t).str() == t);
  }
  CHECK_THROWS_AS(BranchTag::parse("bogus"), ValidationError);
}

TEST_CASE("residual scale") {
  const Params p{-15.5, 1.0, 3.0};
  ModalSolution s;
  s.modes[3] = {1.0, 1.0};
  CHECK(residual_scale(s, p, kScaled) == doctest::Approx(std::max({1.0, 81.0, 3.0, 15.5 * 9})));
}
