#include "hrlab/sharp_constants.hpp"

#include <cmath>
#include <limits>

#include "hrlab/errors.hpp"
#include "hrlab/spectrum.hpp"

namespace hrlab {

namespace {

constexpr int kMinScan = 64;
constexpr int kMaxScan = 10000;

// Scan j = 0, 1, 2, ... keeping the smallest minimizer; certify once the
// sequence has risen for 3 consecutive steps past the current best and at
// least kMinScan degrees were seen.
template <class ValueAt>
ConstantResult scan_min(ValueAt&& value_at) {
  ConstantResult res;
  res.value = value_at(0);
  res.argmin_j = 0;
  res.scanned_up_to = 0;
  double prev = res.value;
  int consecutive_up = 0;
  for (int j = 1; j <= kMaxScan; ++j) {
    const double v = value_at(j);
    res.scanned_up_to = j;
    if (v < res.value) {
      res.value = v;
      res.argmin_j = j;
    }
    consecutive_up = (v > prev) ? consecutive_up + 1 : 0;
    prev = v;
    if (consecutive_up >= 3 && j >= kMinScan) {
      res.tail_certified = true;
      break;
    }
  }
  return res;
}

}  // namespace

double alpha_coefficient(int n, double gamma, int j) {
  if (n < 2) throw DimensionTooSmall("alpha_coefficient: n must be >= 2");
  if (j < 0) throw DomainError("alpha_coefficient: j must be >= 0");
  if (j == 0) {
    const double d = n - gamma;
    return 0.25 * d * d;
  }
  const double lambda = eigenvalue(n, j);
  const double half_sum = 0.25 * (n + gamma - 4.0);
  const double num = half_sum * (n - gamma) + lambda;
  const double den = 0.25 * (n + gamma - 4.0) * (n + gamma - 4.0) + lambda;
  return num * num / den;
}

double rellich_summand(int n, double gamma, int j) {
  if (n < 2) throw DimensionTooSmall("rellich_summand: n must be >= 2");
  if (j < 0) throw DomainError("rellich_summand: j must be >= 0");
  const double base = 0.25 * (n - 2.0) * (n - 2.0) - 0.25 * (gamma - 2.0) * (gamma - 2.0) +
                      eigenvalue(n, j);
  return base * base;
}

ConstantResult hardy_rellich_constant(int n, double gamma) {
  return scan_min([n, gamma](int j) { return alpha_coefficient(n, gamma, j); });
}

ConstantResult rellich_constant(int n, double gamma) {
  return scan_min([n, gamma](int j) { return rellich_summand(n, gamma, j); });
}

ConstantInequalityReport check_constant_inequality(int n, double gamma, int j_max,
                                                   double tol_scale) {
  if (j_max < 0) throw DomainError("check_constant_inequality: j_max must be >= 0");
  ConstantInequalityReport rep;
  rep.constant = hardy_rellich_constant(n, gamma);
  const double a = rep.constant.value;
  const double q = 0.25 * (n + gamma - 4.0) * (n + gamma - 4.0);

  rep.holds = true;
  rep.min_slack = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= j_max; ++j) {
    const double lambda = eigenvalue(n, j);
    const double lhs = lambda * a;
    const double rhs = q * (0.25 * (n - gamma) * (n - gamma) + 2.0 * lambda - a) +
                       lambda * (lambda + (n + gamma - 4.0) * (2.0 - gamma));
    const double tol = tol_scale * (1.0 + std::fabs(lhs) + std::fabs(rhs));
    const double slack = rhs - lhs;
    if (slack < rep.min_slack) {
      rep.min_slack = slack;
      rep.worst_j = j;
    }
    if (slack < -tol) rep.holds = false;
  }
  return rep;
}

}  // namespace hrlab
