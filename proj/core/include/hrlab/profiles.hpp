#ifndef HRLAB_PROFILES_HPP
#define HRLAB_PROFILES_HPP

#include <string>
#include <variant>
#include <vector>

#include "hrlab/params.hpp"
#include "hrlab/spectrum.hpp"

namespace hrlab {

/// Compactly supported C^2 radial test function on (0, R) with analytic
/// (closed-form, never finite-difference) first and second derivatives.
/// Two kinds:
///
///  poly bump     F(r) = (r-a)^p (b-r)^p q(r)          on [a, b]
///    with 0 < a < b, endpoint order p >= 3 and a polynomial modulation q
///    (power basis in r, lowest degree first, default 1). Exactly polynomial
///    on its support, which the exact-integration oracle relies on.
///
///  log bump      F(r) = r^sigma sin^3(pi x) q(x),  x = ln(r/a) / ln(b/a)
///    with a polynomial modulation q in the normalized log coordinate x.
///    sin^3 vanishes to second order at both edges, so F is C^2 across the
///    support boundary. Used by the optimality probe: Rayleigh-quotient
///    minimizing sequences vary on logarithmic scale, which polynomials in r
///    cannot resolve over wide supports.
///
/// Both kinds vanish identically (value and derivatives) outside (a, b), and
/// both are closed under the dilation rescale_to.
class RadialProfile {
 public:
  enum class Kind { kPolyBump, kLogBump };

  struct Derivatives {
    double f = 0.0;
    double df = 0.0;
    double d2f = 0.0;
  };

  /// (F, F', F'') at r; identically (0,0,0) outside the open support.
  Derivatives eval(double r) const;

  Kind kind() const;
  double support_lo() const;
  double support_hi() const;

  /// Modulation coefficients (in r for poly bumps, in x for log bumps).
  const std::vector<double>& modulation() const;

  /// Poly bumps only: endpoint order p. Throws DomainError otherwise.
  int endpoint_order() const;

  /// Log bumps only: power exponent sigma. Throws DomainError otherwise.
  double power_exponent() const;

 private:
  struct PolyData {
    double a, b;
    int p;
    std::vector<double> q;
  };
  struct LogData {
    double a, b;
    double sigma;
    std::vector<double> q;
  };
  explicit RadialProfile(PolyData d) : data_(std::move(d)) {}
  explicit RadialProfile(LogData d) : data_(std::move(d)) {}
  friend RadialProfile make_poly_bump(double a, double b, int p, std::vector<double> modulation);
  friend RadialProfile make_log_bump(double a, double b, double sigma,
                                     std::vector<double> modulation);
  friend RadialProfile rescale_to(const RadialProfile& profile, double rho, double radius);

  std::variant<PolyData, LogData> data_;
};

/// Errors: BadSupport (a <= 0 or a >= b), SmoothnessTooLow (p < 3),
/// DomainError (modulation empty or identically zero).
RadialProfile make_poly_bump(double a, double b, int p, std::vector<double> modulation = {1.0});

/// Errors: BadSupport (a <= 0 or a >= b), DomainError (modulation empty or
/// identically zero).
RadialProfile make_log_bump(double a, double b, double sigma,
                            std::vector<double> modulation = {1.0});

/// Rescaling map F_hat(y) = F(rho * y / R) for a profile supported in (0, rho).
/// The support contracts to (a R / rho, b R / rho) inside (0, R) and the
/// derivatives pick up factors (rho/R) and (rho/R)^2. The scale is absorbed
/// into the profile data, so each kind maps to itself.
RadialProfile rescale_to(const RadialProfile& profile, double rho, double radius);

/// Free-function form of RadialProfile::eval.
RadialProfile::Derivatives eval_with_derivs(const RadialProfile& profile, double r);

/// One-line structured record, e.g. "polybump a=... b=... p=... q=c0,c1,...",
/// round-trippable through profile_from_record; used in sweep manifests and
/// probe replay output.
std::string to_record(const RadialProfile& profile);
RadialProfile profile_from_record(const std::string& record);

/// One term F_j(r) * phi_j(theta) of a spherical-harmonic expansion.
struct ModeTerm {
  SphericalMode mode;
  RadialProfile profile;
};

/// f(r, theta) = sum_j F_j(r) phi_j(theta) with one radial profile per degree.
/// Orthonormality of the phi_j is exact by assumption, so cross terms between
/// distinct degrees vanish in every quadratic functional and all evaluations
/// reduce to sums of 1-D radial integrals.
class ModeExpansion {
 public:
  /// Requires: terms nonempty, degrees pairwise distinct, each eigenvalue
  /// consistent with params.n, each support strictly inside (0, R).
  /// Terms are stored sorted by degree.
  ModeExpansion(const ValidatedParameters& params, std::vector<ModeTerm> terms);

  const ValidatedParameters& params() const { return params_; }
  const std::vector<ModeTerm>& terms() const { return terms_; }

 private:
  ValidatedParameters params_;
  std::vector<ModeTerm> terms_;
};

}  // namespace hrlab

#endif  // HRLAB_PROFILES_HPP
