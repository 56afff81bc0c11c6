#include "hrlab/quadrature.hpp"

#include <cmath>

namespace hrlab {

QuadResult integrate(const WeightedIntegral& w, double rel_tol) {
  if (w.deriv_order < 0 || w.deriv_order > 2) {
    throw DomainError("WeightedIntegral: deriv_order must be 0, 1 or 2");
  }
  if (w.log_weights.depth > 0) require_admissible(w.log_weights);

  const double a = w.profile.support_lo();
  const double b = w.profile.support_hi();
  const auto pick = [order = w.deriv_order](const RadialProfile::Derivatives& d) {
    return order == 0 ? d.f : (order == 1 ? d.df : d.d2f);
  };

  if (w.log_weights.depth == 0) {
    return integrate_adaptive(
        [&](double r) {
          const double g = pick(w.profile.eval(r));
          return std::pow(r, w.mu) * g * g;
        },
        a, b, rel_tol);
  }
  return integrate_adaptive(
      [&](double r) {
        const double g = pick(w.profile.eval(r));
        return std::pow(r, w.mu) * g * g * log_weight_sum(w.log_weights, r);
      },
      a, b, rel_tol);
}

}  // namespace hrlab
