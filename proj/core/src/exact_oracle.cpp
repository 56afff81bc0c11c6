#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <vector>

#include "hrlab/quadrature.hpp"

namespace hrlab {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;
using Poly = std::vector<Rational>;  // power basis, lowest degree first

Poly poly_mul(const Poly& x, const Poly& y) {
  Poly out(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

Poly poly_diff(const Poly& x) {
  if (x.size() <= 1) return Poly{Rational(0)};
  Poly out(x.size() - 1);
  for (std::size_t k = 1; k < x.size(); ++k) out[k - 1] = x[k] * static_cast<int>(k);
  return out;
}

// (c0 + c1 * r)^p by repeated multiplication; p is small.
Poly linear_power(const Rational& c0, const Rational& c1, int p) {
  Poly acc{Rational(1)};
  const Poly lin{c0, c1};
  for (int i = 0; i < p; ++i) acc = poly_mul(acc, lin);
  return acc;
}

Rational rat_ipow(const Rational& x, long k) {
  if (k < 0) return 1 / rat_ipow(x, -k);
  Rational acc(1);
  for (long i = 0; i < k; ++i) acc *= x;
  return acc;
}

Poly expand_profile(const RadialProfile& profile, int deriv_order) {
  if (profile.kind() != RadialProfile::Kind::kPolyBump) {
    throw DomainError("exact oracle requires a polynomial (poly bump) profile");
  }
  const Rational a(profile.support_lo());
  const Rational b(profile.support_hi());
  const int p = profile.endpoint_order();

  Poly poly = poly_mul(linear_power(-a, Rational(1), p),   // (r - a)^p
                       linear_power(b, Rational(-1), p));  // (b - r)^p
  Poly q;
  q.reserve(profile.modulation().size());
  for (double c : profile.modulation()) q.emplace_back(c);
  poly = poly_mul(poly, q);
  for (int d = 0; d < deriv_order; ++d) poly = poly_diff(poly);
  return poly;
}

// sum_k coeffs[k] * r^(k + shift) integrated over [lo, hi]; rational part plus
// a single ln(hi/lo) coefficient when the exponent -1 occurs. The two parts
// can cancel almost completely, so they are combined in 50-digit arithmetic
// and rounded to double once at the end.
double integrate_laurent(const Poly& coeffs, long shift, const Rational& lo, const Rational& hi) {
  Rational rational_part(0);
  Rational log_coefficient(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const long m = static_cast<long>(k) + shift;
    if (m == -1) {
      log_coefficient += coeffs[k];
    } else {
      rational_part += coeffs[k] * (rat_ipow(hi, m + 1) - rat_ipow(lo, m + 1)) / (m + 1);
    }
  }
  if (log_coefficient == 0) return rational_part.convert_to<double>();
  const Float50 total = Float50(rational_part) +
                        Float50(log_coefficient) * log(Float50(hi) / Float50(lo));
  return total.convert_to<double>();
}

}  // namespace

double oracle_poly_power(const RadialProfile& profile, int deriv_order, double mu) {
  if (deriv_order < 0 || deriv_order > 2) {
    throw DomainError("oracle_poly_power: deriv_order must be 0, 1 or 2");
  }
  if (std::nearbyint(mu) != mu || std::fabs(mu) > 1e6) {
    throw NonIntegerExponent("oracle_poly_power: mu must be a (moderate) integer");
  }
  const Poly deriv = expand_profile(profile, deriv_order);
  const Poly squared = poly_mul(deriv, deriv);
  const double lo = profile.support_lo();
  const double hi = profile.support_hi();
  return integrate_laurent(squared, static_cast<long>(mu), Rational(lo), Rational(hi));
}

namespace detail {

double integrate_laurent_exact(const std::vector<double>& coeffs, int shift, double lo,
                               double hi) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("integrate_laurent_exact: need 0 < lo < hi");
  Poly rc;
  rc.reserve(coeffs.size());
  for (double c : coeffs) rc.emplace_back(c);
  return integrate_laurent(rc, shift, Rational(lo), Rational(hi));
}

std::vector<double> bump_power_coefficients(const RadialProfile& profile, int deriv_order) {
  const Poly poly = expand_profile(profile, deriv_order);
  std::vector<double> out;
  out.reserve(poly.size());
  for (const Rational& c : poly) out.push_back(c.convert_to<double>());
  return out;
}

}  // namespace detail

}  // namespace hrlab
