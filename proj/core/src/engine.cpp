#include "hrlab/engine.hpp"

#include <cmath>

#include "hrlab/errors.hpp"

namespace hrlab {

namespace {

// int r^mu (F^{(d)})^2 [W_N] dr with error tracking.
ValueWithError weighted(const RadialProfile& profile, int deriv_order, double mu,
                        const LogWeightSpec& spec, double rel_tol) {
  const QuadResult q = integrate(WeightedIntegral{profile, deriv_order, mu, spec}, rel_tol);
  return {q.value, q.abs_err};
}

ValueWithError plain(const RadialProfile& profile, int deriv_order, double mu, double rel_tol) {
  return weighted(profile, deriv_order, mu, LogWeightSpec{}, rel_tol);
}

void accumulate(ValueWithError& acc, double coefficient, const ValueWithError& term) {
  acc.value += coefficient * term.value;
  acc.abs_err += std::fabs(coefficient) * term.abs_err;
}

void finalize(InequalityReport& rep) {
  rep.rhs_total = 0.0;
  for (const RhsTerm& t : rep.rhs_terms) rep.rhs_total += t.value;
  rep.slack = rep.lhs - rep.rhs_total;
  const double magnitude = std::max({std::fabs(rep.lhs), std::fabs(rep.rhs_total), 1.0});
  rep.tolerance = std::max(10.0 * rep.quad_err, 1e-10 * magnitude);
  rep.pass = rep.slack >= -rep.tolerance;
}

}  // namespace

InequalityReport radial_hardy_report(const RadialProfile& profile, double alpha,
                                     const LogWeightSpec& spec, double rel_tol) {
  require_admissible(spec);
  InequalityReport rep;
  rep.kind = "radial-hardy";
  rep.radial_alpha = alpha;

  const ValueWithError lhs = plain(profile, 1, alpha, rel_tol);
  rep.lhs = lhs.value;
  rep.quad_err = lhs.abs_err;

  const double hardy_coeff = 0.25 * (1.0 - alpha) * (1.0 - alpha);
  ValueWithError hardy{0.0, 0.0};
  if (hardy_coeff != 0.0) {
    accumulate(hardy, hardy_coeff, plain(profile, 0, alpha - 2.0, rel_tol));
  }
  rep.rhs_terms.push_back({"hardy", hardy.value});
  rep.quad_err += hardy.abs_err;

  ValueWithError log_term{0.0, 0.0};
  if (spec.depth > 0) {
    accumulate(log_term, 0.25, weighted(profile, 0, alpha - 2.0, spec, rel_tol));
  }
  rep.rhs_terms.push_back({"log", log_term.value});
  rep.quad_err += log_term.abs_err;

  finalize(rep);
  return rep;
}

double factorization_residual(const RadialProfile& profile, double alpha,
                              const LogWeightSpec& spec, double rel_tol) {
  const InequalityReport rep = radial_hardy_report(profile, alpha, spec, rel_tol);

  const auto t_of_f = [&](double r) {
    const auto d = profile.eval(r);
    const double chain = spec.depth > 0 ? log_chain_sum(spec, r) : 0.0;
    const double t = std::pow(r, 0.5 * alpha) * d.df +
                     std::pow(r, 0.5 * (alpha - 2.0)) *
                         (0.5 * (alpha - 1.0) + 0.5 * chain) * d.f;
    return t * t;
  };
  const QuadResult tf = integrate_adaptive(t_of_f, profile.support_lo(), profile.support_hi(),
                                           rel_tol);
  return std::fabs(tf.value - rep.slack) / std::max(rep.lhs, 1e-30);
}

ValueWithError mode_laplacian_energy(const RadialProfile& profile, const SphericalMode& mode,
                                     const ValidatedParameters& params, double rel_tol) {
  const int n = params.n();
  const double gamma = params.gamma();
  const double lambda = mode.lambda;

  ValueWithError out = plain(profile, 2, gamma + n - 1.0, rel_tol);
  const double c1 = 2.0 * lambda + (n - 1.0) * (1.0 - gamma);
  if (c1 != 0.0) accumulate(out, c1, plain(profile, 1, gamma + n - 3.0, rel_tol));
  const double c0 = lambda * (lambda + (gamma + n - 4.0) * (2.0 - gamma));
  if (c0 != 0.0) accumulate(out, c0, plain(profile, 0, gamma + n - 5.0, rel_tol));
  return out;
}

ValueWithError mode_gradient_energy(const RadialProfile& profile, const SphericalMode& mode,
                                    const ValidatedParameters& params, bool log_weighted,
                                    double rel_tol) {
  const int n = params.n();
  const double gamma = params.gamma();
  const LogWeightSpec spec = log_weighted ? params.log_weight_spec() : LogWeightSpec{};
  if (log_weighted && spec.depth == 0) return {0.0, 0.0};

  ValueWithError out{0.0, 0.0};
  accumulate(out, 1.0, weighted(profile, 1, gamma + n - 3.0, spec, rel_tol));
  if (mode.lambda != 0.0) {
    accumulate(out, mode.lambda, weighted(profile, 0, gamma + n - 5.0, spec, rel_tol));
  }
  return out;
}

InequalityReport hardy_rellich_report(const ModeExpansion& expansion,
                                      const EngineOptions& options) {
  const ValidatedParameters& p = expansion.params();
  const ConstantResult constant = hardy_rellich_constant(p.n(), p.gamma());
  if (!constant.tail_certified) {
    throw TailNotCertified("hardy_rellich_constant scan not certified for n = " +
                           std::to_string(p.n()));
  }
  const double a_used = constant.value * options.debug_constant_scale;
  const double rel_tol = options.rel_tol;
  const LogWeightSpec spec = p.log_weight_spec();

  InequalityReport rep;
  rep.kind = "hardy-rellich";
  rep.params = p.raw();

  ValueWithError lhs{0.0, 0.0};
  ValueWithError grad_const{0.0, 0.0};
  ValueWithError grad_log{0.0, 0.0};
  ValueWithError angular_log{0.0, 0.0};

  for (const ModeTerm& term : expansion.terms()) {
    accumulate(lhs, 1.0, mode_laplacian_energy(term.profile, term.mode, p, rel_tol));
    accumulate(grad_const, 1.0, mode_gradient_energy(term.profile, term.mode, p, false, rel_tol));
    if (spec.depth > 0) {
      accumulate(grad_log, 1.0, mode_gradient_energy(term.profile, term.mode, p, true, rel_tol));
      if (term.mode.lambda != 0.0) {
        accumulate(angular_log, term.mode.lambda,
                   weighted(term.profile, 0, p.gamma() + p.n() - 5.0, spec, rel_tol));
      }
    }
  }

  rep.lhs = lhs.value;
  rep.rhs_terms.push_back({"constant", a_used * grad_const.value});
  rep.rhs_terms.push_back({"log_gradient", 0.25 * grad_log.value});
  rep.rhs_terms.push_back({"log_angular", 0.25 * angular_log.value});
  rep.quad_err = lhs.abs_err + std::fabs(a_used) * grad_const.abs_err +
                 0.25 * grad_log.abs_err + 0.25 * angular_log.abs_err;
  finalize(rep);
  return rep;
}

InequalityReport rellich_report(const ModeExpansion& expansion, const EngineOptions& options) {
  const ValidatedParameters& p = expansion.params();
  const ConstantResult constant = rellich_constant(p.n(), p.gamma());
  if (!constant.tail_certified) {
    throw TailNotCertified("rellich_constant scan not certified for n = " +
                           std::to_string(p.n()));
  }
  const double c_used = constant.value * options.debug_constant_scale;
  const double rel_tol = options.rel_tol;
  const LogWeightSpec spec = p.log_weight_spec();
  const double n = p.n();
  const double gamma = p.gamma();
  const double log_coeff =
      ((n - gamma) * (n - gamma) + (n + gamma - 4.0) * (n + gamma - 4.0)) / 16.0;

  InequalityReport rep;
  rep.kind = "rellich";
  rep.params = p.raw();

  ValueWithError lhs{0.0, 0.0};
  ValueWithError potential{0.0, 0.0};
  ValueWithError potential_log{0.0, 0.0};

  for (const ModeTerm& term : expansion.terms()) {
    accumulate(lhs, 1.0, mode_laplacian_energy(term.profile, term.mode, p, rel_tol));
    accumulate(potential, 1.0, plain(term.profile, 0, gamma + n - 5.0, rel_tol));
    if (spec.depth > 0) {
      accumulate(potential_log, 1.0, weighted(term.profile, 0, gamma + n - 5.0, spec, rel_tol));
    }
  }

  rep.lhs = lhs.value;
  rep.rhs_terms.push_back({"constant", c_used * potential.value});
  rep.rhs_terms.push_back({"log", log_coeff * potential_log.value});
  rep.quad_err = lhs.abs_err + std::fabs(c_used) * potential.abs_err +
                 log_coeff * potential_log.abs_err;
  finalize(rep);
  return rep;
}

double disk_laplacian_energy(const RadialProfile& profile, int j, double gamma, double rel_tol) {
  if (j < 0) throw DomainError("disk_laplacian_energy: j must be >= 0");
  const double jsq = static_cast<double>(j) * j;
  const QuadResult q = integrate_adaptive(
      [&](double r) {
        const auto d = profile.eval(r);
        const double lap = d.d2f + d.df / r - jsq * d.f / (r * r);
        return std::pow(r, gamma + 1.0) * lap * lap;
      },
      profile.support_lo(), profile.support_hi(), rel_tol);
  return q.value;
}

}  // namespace hrlab
