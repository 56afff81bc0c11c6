#ifndef HRLAB_QUADRATURE_HPP
#define HRLAB_QUADRATURE_HPP

#include <cmath>
#include <queue>
#include <vector>

#include "hrlab/errors.hpp"
#include "hrlab/log_weights.hpp"
#include "hrlab/profiles.hpp"

namespace hrlab {

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;   // <= the requested tolerance iff converged
  int subdivisions = 0;   // panels used
  bool converged = true;  // false: panel cap hit, best value returned flagged
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
// Nodes with even index are the embedded Gauss-7 points.
inline constexpr double kGk15Nodes[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr double kKronrodWeights[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

inline constexpr double kGaussWeights[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct PanelEstimate {
  double value = 0.0;
  double err = 0.0;
};

// One Gauss-Kronrod 15(7) application on [a, b]. The error estimate is the
// plain |K15 - G7| difference, which over- rather than under-estimates for
// the smooth integrands handled here.
template <class F>
PanelEstimate gk15(F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double kron = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fx = f(mid + half * kGk15Nodes[i]);
    kron += kKronrodWeights[i] * fx;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fx;
  }
  kron *= half;
  gauss *= half;
  return {kron, std::fabs(kron - gauss)};
}

}  // namespace detail

/// Adaptive bisection with an embedded Gauss-Kronrod 15(7) rule per panel.
///
/// Refines the panel with the largest local error estimate until the summed
/// estimate falls below max(abs_tol, rel_tol * |value|) or max_panels panels
/// exist. rel_tol must lie in [1e-13, 1e-3]. On panel exhaustion the best
/// value is returned with converged = false, never silently.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                              int max_panels = 10000) {
  if (!(rel_tol >= 1e-13 && rel_tol <= 1e-3)) {
    throw DomainError("integrate_adaptive: rel_tol must lie in [1e-13, 1e-3]");
  }
  QuadResult out;
  if (!(b > a)) return out;  // empty domain

  struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
  };

  // Start from a uniform split rather than one coarse panel: a single
  // Gauss/Kronrod pair can agree by accident on structured integrands and
  // fake convergence.
  std::priority_queue<Panel> queue;
  double total = 0.0;
  double queue_err = 0.0;
  double frozen_err = 0.0;  // panels too narrow to split further
  const int initial = std::min(8, max_panels);
  for (int i = 0; i < initial; ++i) {
    const double lo = a + (b - a) * i / initial;
    const double hi = a + (b - a) * (i + 1) / initial;
    const auto est = detail::gk15(f, lo, hi);
    queue.push(Panel{lo, hi, est.value, est.err});
    total += est.value;
    queue_err += est.err;
  }
  int panels = initial;

  const auto target = [&] { return std::max(abs_tol, rel_tol * std::fabs(total)); };

  while (!queue.empty() && queue_err + frozen_err > target() && panels < max_panels) {
    const Panel worst = queue.top();
    queue.pop();
    queue_err -= worst.err;

    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a) || !(mid < worst.b)) {
      frozen_err += worst.err;  // interval at double-precision resolution
      continue;
    }
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    queue.push(Panel{worst.a, mid, left.value, left.err});
    queue.push(Panel{mid, worst.b, right.value, right.err});
    queue_err += left.err + right.err;
    ++panels;
  }

  out.value = total;
  out.abs_err = queue_err + frozen_err;
  out.subdivisions = panels;
  out.converged = out.abs_err <= target();
  return out;
}

/// A radial energy integrand r^mu * (F^{(d)}(r))^2, optionally multiplied by
/// the iterated-log weight W_N(r). The integration domain is always the
/// profile support [a, b] (the integrand vanishes identically elsewhere),
/// which keeps both the r -> 0 power singularity and the r -> R log blow-up
/// outside the evaluated range.
struct WeightedIntegral {
  RadialProfile profile;
  int deriv_order = 0;           // 0 | 1 | 2
  double mu = 0.0;               // power of r
  LogWeightSpec log_weights{};   // depth 0: no log factor
};

QuadResult integrate(const WeightedIntegral& w, double rel_tol);

/// Exact value of integrate(w, .) for integer mu and no log factor, computed
/// by expanding (F^{(d)})^2 * r^mu as a Laurent polynomial in rational
/// arithmetic and integrating term by term (one ln(b/a) term when the
/// exponent -1 occurs). Ground truth for the adaptive rule; shares no code
/// path with it. Throws NonIntegerExponent for fractional mu.
double oracle_poly_power(const RadialProfile& profile, int deriv_order, double mu);

namespace detail {

/// Exact integral over [lo, hi] of sum_k coeffs[k] * r^(k + shift), in
/// rational arithmetic (log term for exponent -1). Test hook underlying
/// oracle_poly_power.
double integrate_laurent_exact(const std::vector<double>& coeffs, int shift, double lo, double hi);

/// Power-basis coefficients of (r-a)^p (b-r)^p q(r), exactly (in rationals,
/// rounded to double once at the end).
std::vector<double> bump_power_coefficients(const RadialProfile& profile, int deriv_order);

}  // namespace detail

}  // namespace hrlab

#endif  // HRLAB_QUADRATURE_HPP
