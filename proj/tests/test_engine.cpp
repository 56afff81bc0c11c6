#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hrlab/engine.hpp"
#include "hrlab/errors.hpp"
#include "hrlab/rng.hpp"

using namespace hrlab;

namespace {

RadialProfile random_bump(Rng& rng) {
  const double a = rng.uniform(0.05, 0.4);
  const double b = rng.uniform(0.6, 0.95);
  const int p = 3 + rng.uniform_int(0, 2);
  std::vector<double> q{rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0)};
  return make_poly_bump(a, b, p, std::move(q));
}

double total(const InequalityReport& rep, const char* name) {
  for (const auto& term : rep.rhs_terms) {
    if (term.name == name) return term.value;
  }
  FAIL("missing rhs term ", name);
  return 0.0;
}

}  // namespace

TEST_CASE("radial Hardy report basics") {
  const auto bump = make_poly_bump(0.2, 0.8, 4);
  const LogWeightSpec spec{1, std::exp(1.0), 1.0};

  const auto rep = radial_hardy_report(bump, 0.0, spec);
  CHECK(rep.kind == "radial-hardy");
  CHECK(rep.radial_alpha == 0.0);
  CHECK(rep.slack > 0.0);  // strict for fixed compactly supported F
  CHECK(rep.pass);
  CHECK(rep.rhs_total == doctest::Approx(total(rep, "hardy") + total(rep, "log")));

  // alpha = 1 kills the Hardy term; with N = 0 the whole rhs vanishes
  const auto degenerate = radial_hardy_report(bump, 1.0, LogWeightSpec{0, 1.0, 1.0});
  CHECK(total(degenerate, "hardy") == 0.0);
  CHECK(degenerate.rhs_total == 0.0);
  CHECK(degenerate.slack == degenerate.lhs);
  CHECK(degenerate.lhs > 0.0);

  // a deeper tower adds positive mass to the rhs, lhs unchanged
  const LogWeightSpec two{2, iter_exp(2), 1.0};
  const auto rep1 = radial_hardy_report(bump, 0.0, LogWeightSpec{1, iter_exp(2), 1.0});
  const auto rep2 = radial_hardy_report(bump, 0.0, two);
  CHECK(rep2.lhs == doctest::Approx(rep1.lhs).epsilon(1e-12));
  CHECK(rep2.rhs_total >= rep1.rhs_total);
}

TEST_CASE("factorization identity residuals") {
  const auto bump = make_poly_bump(0.2, 0.8, 4);
  CHECK(factorization_residual(bump, 0.0, LogWeightSpec{1, std::exp(1.0), 1.0}) <= 1e-8);
  CHECK(factorization_residual(bump, 1.0, LogWeightSpec{1, std::exp(1.0), 1.0}) <= 1e-8);
  CHECK(factorization_residual(bump, -2.0, LogWeightSpec{3, iter_exp(3), 1.0}) <= 1e-8);
  // classical Hardy factorization at depth 0
  CHECK(factorization_residual(bump, 0.0, LogWeightSpec{0, 1.0, 1.0}) <= 1e-10);
  CHECK(factorization_residual(bump, 2.5, LogWeightSpec{0, 1.0, 1.0}) <= 1e-10);
}

TEST_CASE("factorization residual property over random bumps") {
  Rng rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const auto bump = random_bump(rng);
    for (double alpha = -2.0; alpha <= 3.0; alpha += 1.0) {
      for (int depth = 0; depth <= 3; ++depth) {
        const LogWeightSpec spec{depth, depth == 0 ? 1.0 : iter_exp(depth), 1.0};
        CHECK(factorization_residual(bump, alpha, spec) <= 1e-8);
      }
    }
  }
}

TEST_CASE("mode Laplacian energy reduces to two terms at degree zero") {
  const auto params = validate_params({4, 0.5, 0, 1.0, 1.0});
  const auto bump = make_poly_bump(0.3, 0.7, 4);
  const auto got = mode_laplacian_energy(bump, make_mode(4, 0), params);
  const double i2 = integrate(WeightedIntegral{bump, 2, 0.5 + 4 - 1, {}}, 1e-10).value;
  const double i1 = integrate(WeightedIntegral{bump, 1, 0.5 + 4 - 3, {}}, 1e-10).value;
  CHECK(got.value == doctest::Approx(i2 + 3.0 * 0.5 * i1).epsilon(1e-9));
}

TEST_CASE("coefficient identity behind the mode-wise chain") {
  // (n+gamma-2)^2/4 + (n-1)(1-gamma) = (n-gamma)^2/4
  for (int n = 2; n <= 8; ++n) {
    for (double gamma = -3.0; gamma <= 5.0; gamma += 0.25) {
      const double lhs = 0.25 * (n + gamma - 2.0) * (n + gamma - 2.0) +
                         (n - 1.0) * (1.0 - gamma);
      const double rhs = 0.25 * (n - gamma) * (n - gamma);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
  CHECK(0.25 * (4 + 1 - 2.0) * (4 + 1 - 2.0) + 3.0 * 0.0 == doctest::Approx(9.0 / 4.0));
}

TEST_CASE("disk oracle agrees with the mode reduction in dimension 2") {
  const auto bump = make_poly_bump(0.2, 0.8, 4);
  const auto p0 = validate_params({2, 0.0, 0, 1.0, 1.0});
  CHECK(disk_laplacian_energy(bump, 0, 0.0) ==
        doctest::Approx(mode_laplacian_energy(bump, make_mode(2, 0), p0).value).epsilon(1e-8));

  const auto p2 = validate_params({2, 2.0, 0, 1.0, 1.0});
  CHECK(disk_laplacian_energy(bump, 1, 2.0) ==
        doctest::Approx(mode_laplacian_energy(bump, make_mode(2, 1), p2).value).epsilon(1e-6));

  const auto pm1 = validate_params({2, -1.0, 0, 1.0, 1.0});
  CHECK(disk_laplacian_energy(bump, 3, -1.0) ==
        doctest::Approx(mode_laplacian_energy(bump, make_mode(2, 3), pm1).value).epsilon(1e-6));
}

TEST_CASE("disk oracle agreement across seeded cases") {
  Rng rng(31337);
  const double gammas[] = {-1.0, 0.0, 2.0};
  for (int k = 0; k < 30; ++k) {
    const auto bump = random_bump(rng);
    const int j = rng.uniform_int(0, 4);
    const double gamma = gammas[rng.uniform_int(0, 2)];
    const auto params = validate_params({2, gamma, 0, 1.0, 1.0});
    const double direct = disk_laplacian_energy(bump, j, gamma, 1e-10);
    const double reduced = mode_laplacian_energy(bump, make_mode(2, j), params, 1e-10).value;
    CHECK(std::fabs(direct - reduced) <= 1e-6 * std::fabs(reduced));
  }
}

TEST_CASE("Hardy--Rellich report on single modes") {
  const auto bump = make_poly_bump(0.2, 0.8, 4);

  const auto p5 = validate_params({5, 0.0, 1, 1.0, std::exp(1.0)});
  const auto rep5 = hardy_rellich_report(ModeExpansion(p5, {{make_mode(5, 0), bump}}));
  CHECK(rep5.kind == "hardy-rellich");
  CHECK(rep5.slack >= 0.0);
  CHECK(rep5.pass);

  // A_{2,2} = 0 yet the log terms keep the rhs strictly positive
  const auto p22 = validate_params({2, 2.0, 1, 1.0, 1.0});
  const auto rep22 = hardy_rellich_report(ModeExpansion(p22, {{make_mode(2, 1), bump}}));
  CHECK(total(rep22, "constant") == 0.0);
  CHECK(rep22.rhs_total > 0.0);
  CHECK(rep22.slack >= 0.0);

  const auto p31 = validate_params({3, 1.0, 0, 1.0, 1.0});
  const auto two_modes = hardy_rellich_report(
      ModeExpansion(p31, {{make_mode(3, 0), bump}, {make_mode(3, 2), bump}}));
  CHECK(two_modes.slack >= 0.0);
  CHECK(two_modes.pass);
}

TEST_CASE("Rellich report coefficients and slack") {
  const auto bump = make_poly_bump(0.2, 0.8, 4);

  // C_{3,1} = 0: rhs reduces to the log term with coefficient 1/4
  const auto p31 = validate_params({3, 1.0, 1, 1.0, 1.0});
  const auto rep31 = rellich_report(ModeExpansion(p31, {{make_mode(3, 0), bump}}));
  CHECK(total(rep31, "constant") == 0.0);
  const double expected_coeff = ((3 - 1.0) * (3 - 1.0) + 0.0) / 16.0;
  CHECK(expected_coeff == 0.25);
  const double w_int =
      integrate(WeightedIntegral{bump, 0, 1.0 + 3 - 5.0, p31.log_weight_spec()}, 1e-10).value;
  CHECK(total(rep31, "log") == doctest::Approx(0.25 * w_int).epsilon(1e-8));
  CHECK(rep31.slack >= 0.0);

  // (2,2): coefficient [(0)^2 + (-2)^2]/16 = 1/4 as well
  const auto p22 = validate_params({2, 2.0, 1, 1.0, 1.0});
  const auto rep22 = rellich_report(ModeExpansion(p22, {{make_mode(2, 0), bump}}));
  const double w22 =
      integrate(WeightedIntegral{bump, 0, 2.0 + 2 - 5.0, p22.log_weight_spec()}, 1e-10).value;
  CHECK(total(rep22, "log") == doctest::Approx(0.25 * w22).epsilon(1e-8));
  CHECK(rep22.slack >= 0.0);

  const auto p50 = validate_params({5, 0.0, 1, 1.0, 1.0});
  const auto rep50 = rellich_report(ModeExpansion(p50, {{make_mode(5, 0), bump}}));
  CHECK(rep50.slack >= 0.0);
  CHECK(rep50.pass);
}

TEST_CASE("rhs grows monotonically with the refinement depth") {
  const auto bump = make_poly_bump(0.25, 0.75, 4);
  const double eta = iter_exp(2);  // admissible for every depth <= 2
  double prev = -1.0;
  for (int depth = 0; depth <= 2; ++depth) {
    const auto params = validate_params({4, 1.0, depth, 1.0, eta});
    const auto rep = hardy_rellich_report(
        ModeExpansion(params, {{make_mode(4, 1), bump}, {make_mode(4, 3), bump}}));
    CHECK(rep.rhs_total >= prev);
    CHECK(rep.slack >= 0.0);
    prev = rep.rhs_total;
  }
}

TEST_CASE("slack suite over the sweep grid") {
  Rng rng(777);
  for (int n = 2; n <= 6; ++n) {
    for (double gamma : {-2.0, -1.0, 0.0, 1.0, 2.0, 3.0, 4.0}) {
      for (int depth : {0, 1, 2}) {
        const double eta = depth == 0 ? 1.0 : iter_exp(depth);
        const auto params = validate_params({n, gamma, depth, 1.0, eta});
        std::vector<ModeTerm> terms;
        for (int j : {0, 2, 5}) terms.push_back({make_mode(n, j), random_bump(rng)});
        const ModeExpansion expansion(params, std::move(terms));

        const auto hr = hardy_rellich_report(expansion);
        CHECK(hr.pass);
        CHECK(hr.slack >= -1e-8 * std::max({std::fabs(hr.lhs), std::fabs(hr.rhs_total), 1.0}));

        const auto re = rellich_report(expansion);
        CHECK(re.pass);
        CHECK(re.slack >= -1e-8 * std::max({std::fabs(re.lhs), std::fabs(re.rhs_total), 1.0}));

        // the radial inequality is never saturated by compactly supported F
        for (const ModeTerm& term : expansion.terms()) {
          const auto radial =
              radial_hardy_report(term.profile, gamma + n - 1.0, params.log_weight_spec());
          CHECK(radial.slack > 0.0);
          CHECK(radial.slack >= -1e-10 * std::max(radial.lhs, 1.0));
        }
      }
    }
  }
}

TEST_CASE("a corrupted constant is detected on a near-extremal trial") {
  const auto params = validate_params({5, 0.0, 0, 1.0, 1.0});
  const auto witness = make_log_bump(1e-6 * 0.999, 0.999, -0.5, {1.0});
  const ModeExpansion expansion(params, {{make_mode(5, 0), witness}});

  EngineOptions clean;
  CHECK(hardy_rellich_report(expansion, clean).pass);

  EngineOptions corrupt;
  corrupt.debug_constant_scale = 1.1;
  CHECK_FALSE(hardy_rellich_report(expansion, corrupt).pass);
}
