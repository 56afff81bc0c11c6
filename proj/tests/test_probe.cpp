#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hrlab/errors.hpp"
#include "hrlab/probe.hpp"
#include "hrlab/rng.hpp"

using namespace hrlab;

TEST_CASE("rayleigh quotient respects the sharp lower bound") {
  const auto bump = make_poly_bump(0.2, 0.8, 4);
  const auto p5 = validate_params({5, 0.0, 0, 1.0, 1.0});
  CHECK(rayleigh_quotient(ModeExpansion(p5, {{make_mode(5, 0), bump}})) >= 6.25);

  const auto p4 = validate_params({4, 0.0, 0, 1.0, 1.0});
  CHECK(rayleigh_quotient(ModeExpansion(p4, {{make_mode(4, 1), bump}})) >= 3.0);

  const auto p3 = validate_params({3, 0.0, 0, 1.0, 1.0});
  CHECK(rayleigh_quotient(ModeExpansion(p3, {{make_mode(3, 1), bump}})) >= 25.0 / 36.0);
}

TEST_CASE("quotient is invariant under profile scaling") {
  const auto params = validate_params({5, 0.0, 0, 1.0, 1.0});
  const auto f = make_poly_bump(0.2, 0.8, 4, {1.0, 0.5});
  const auto cf = make_poly_bump(0.2, 0.8, 4, {3.0, 1.5});  // 3 F
  const double q1 = rayleigh_quotient(ModeExpansion(params, {{make_mode(5, 0), f}}));
  const double q2 = rayleigh_quotient(ModeExpansion(params, {{make_mode(5, 0), cf}}));
  CHECK(q1 == doctest::Approx(q2).epsilon(1e-12));
}

TEST_CASE("second-order ratio values and scale invariance") {
  const auto params = validate_params({5, 0.0, 0, 1.0, 1.0});
  const auto bump = make_poly_bump(0.2, 0.8, 4);
  const double ratio = second_order_ratio(bump, params);
  CHECK(ratio >= 9.0 / 16.0);  // infimum (2-gamma-n)^2 (4-gamma-n)^2 / 16

  // support rescaling leaves the ratio unchanged
  for (double rho : {2.0, 10.0}) {
    const auto inner = make_poly_bump(0.2 * rho / 2.5, 0.8 * rho / 2.5, 4);  // inside (0, rho)
    const auto scaled = rescale_to(inner, rho, 1.0);
    const double r0 = second_order_ratio(inner, params);
    const double r1 = second_order_ratio(scaled, params);
    CHECK(std::fabs(r0 - r1) <= 1e-10 * std::fabs(r0));
  }

  // (3,1): the target value of the proof sequence is exactly zero
  const double target31 = (2.0 - 1.0 - 3.0) * (2.0 - 1.0 - 3.0) *
                          (4.0 - 1.0 - 3.0) * (4.0 - 1.0 - 3.0) / 16.0;
  CHECK(target31 == 0.0);
  const auto p31 = validate_params({3, 1.0, 0, 1.0, 1.0});
  CHECK(second_order_ratio(bump, p31) > 0.0);
}

TEST_CASE("open cases are flagged") {
  CHECK(optimality_open_case(2, 2.0));
  CHECK(optimality_open_case(3, 1.0));
  CHECK_FALSE(optimality_open_case(5, 0.0));
  CHECK_FALSE(optimality_open_case(2, 0.0));
}

TEST_CASE("probe reaches the sharp constant on a quick run") {
  const auto params = validate_params({5, 0.0, 0, 1.0, 1.0});
  TrialFamily family;
  family.mode_j = 0;
  const auto res = minimize_quotient(family, params, 400, 1);
  CHECK(res.target == 6.25);
  CHECK(res.best_quotient <= 1.05 * 6.25);
  CHECK(res.min_quotient_seen >= 6.25 - 1e-8 * (1.0 + 6.25));
  CHECK(res.evaluations <= 400);
  CHECK_FALSE(res.optimality_open);
  CHECK(!res.best_member.empty());

  // winning member replays to the reported quotient
  const auto best = profile_from_record(res.best_member);
  const double replay = rayleigh_quotient(ModeExpansion(params, {{make_mode(5, 0), best}}));
  CHECK(replay == doctest::Approx(res.best_quotient).epsilon(1e-9));
}

TEST_CASE("mode selection matters: degree-0 trials cannot beat their own floor") {
  // alpha_{4,0,lambda_0} = 4 while A_{4,0} = 3 at degree 1: quotients over
  // degree-0 families stay above 4 (minus noise), strictly above the target
  const auto params = validate_params({4, 0.0, 0, 1.0, 1.0});
  TrialFamily family;
  family.mode_j = 0;
  const auto res = minimize_quotient(family, params, 300, 3);
  CHECK(res.min_quotient_seen >= 4.0 - 1e-6);
  CHECK(res.best_quotient >= 4.0 - 1e-6);
}

TEST_CASE("open case runs report gaps without optimality claims") {
  const auto params = validate_params({2, 2.0, 0, 1.0, 1.0});
  TrialFamily family;
  family.mode_j = hardy_rellich_constant(2, 2.0).argmin_j;
  const auto res = minimize_quotient(family, params, 150, 5);
  CHECK(res.optimality_open);
  CHECK(res.target == 0.0);
  CHECK(res.best_quotient > 0.0);
  CHECK(res.min_quotient_seen >= -1e-8);
}

TEST_CASE("probe argument validation") {
  const auto params = validate_params({5, 0.0, 0, 1.0, 1.0});
  TrialFamily family;
  CHECK_THROWS_AS(minimize_quotient(family, params, 50, 1), DomainError);
  family.modulation_degree = 99;
  CHECK_THROWS_AS(minimize_quotient(family, params, 200, 1), DomainError);
  family.modulation_degree = 4;
  family.margin = 0.5;
  CHECK_THROWS_AS(minimize_quotient(family, params, 200, 1), DomainError);
}
