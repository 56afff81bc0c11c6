#ifndef HRLAB_ENGINE_HPP
#define HRLAB_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hrlab/params.hpp"
#include "hrlab/profiles.hpp"
#include "hrlab/quadrature.hpp"
#include "hrlab/sharp_constants.hpp"

namespace hrlab {

struct ValueWithError {
  double value = 0.0;
  double abs_err = 0.0;
};

struct RhsTerm {
  std::string name;
  double value = 0.0;
};

/// Both sides of one inequality instance. rhs_total is the sum of rhs_terms;
/// slack = lhs - rhs_total; pass means slack >= -tolerance where the
/// tolerance couples to the aggregated quadrature error bound,
///   tolerance = max(10 * quad_err, 1e-10 * magnitude),
/// so integration noise can never fail an instance on its own.
struct InequalityReport {
  std::string kind;
  double lhs = 0.0;
  std::vector<RhsTerm> rhs_terms;
  double rhs_total = 0.0;
  double slack = 0.0;
  double quad_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<Parameters> params;    // dimensional context, when applicable
  std::optional<double> radial_alpha;  // exponent of the 1-D radial inequality
};

struct EngineOptions {
  double rel_tol = 1e-8;              // per-integral relative tolerance (sweeps)
  double debug_constant_scale = 1.0;  // falsifiability hook: scales the sharp constant
};

/// Log-refined radial Hardy inequality on (0, R):
///   lhs  = int r^alpha F'^2
///   rhs  = (1-alpha)^2/4 * int r^(alpha-2) F^2
///        + 1/4 * int r^(alpha-2) W_N F^2.
InequalityReport radial_hardy_report(const RadialProfile& profile, double alpha,
                                     const LogWeightSpec& spec, double rel_tol = 1e-10);

/// Relative residual of the first-order factorization identity behind the
/// radial Hardy inequality: the slack lhs - rhs above equals
///   int_0^R |(T F)(r)|^2 dr,
///   T F = r^(alpha/2) F' + (alpha-1)/2 r^((alpha-2)/2) F
///         + 1/2 r^((alpha-2)/2) * [sum_k prod_p (ln_p(eta/r))^-1] F,
/// exactly. Both sides are computed by independent adaptive quadrature and
/// the residual is |int |TF|^2 - slack| / max(lhs, tiny); zero up to
/// quadrature noise.
double factorization_residual(const RadialProfile& profile, double alpha,
                              const LogWeightSpec& spec, double rel_tol = 1e-12);

/// Per-mode value of int |x|^gamma |Laplacian f|^2 for f = F(r) phi_j(theta):
///   int r^(gamma+n-1) F''^2
///   + [2 lambda_j + (n-1)(1-gamma)] int r^(gamma+n-3) F'^2
///   + lambda_j [lambda_j + (gamma+n-4)(2-gamma)] int r^(gamma+n-5) F^2.
ValueWithError mode_laplacian_energy(const RadialProfile& profile, const SphericalMode& mode,
                                     const ValidatedParameters& params, double rel_tol = 1e-10);

/// Per-mode value of int g(r) |grad f|^2 with g = r^(gamma-2), optionally
/// times W_N:  int g r^(n-1) F'^2 + lambda_j int g r^(n-3) F^2.
ValueWithError mode_gradient_energy(const RadialProfile& profile, const SphericalMode& mode,
                                    const ValidatedParameters& params, bool log_weighted,
                                    double rel_tol = 1e-10);

/// Log-refined Hardy--Rellich inequality on the ball, evaluated through the
/// spherical-harmonic mode reduction (exact by orthonormality):
///   lhs = sum_j mode_laplacian_energy
///   rhs = A_{n,gamma} * sum_j [I1_j + lambda_j I0_j]
///       + 1/4 * sum_j [I1W_j + lambda_j I0W_j]
///       + 1/4 * sum_j lambda_j I0W_j
/// where I1 = int r^(gamma+n-3) F'^2, I0 = int r^(gamma+n-5) F^2 and the W
/// variants carry the iterated-log weight. Throws TailNotCertified when the
/// constant scan could not certify its minimum.
InequalityReport hardy_rellich_report(const ModeExpansion& expansion,
                                      const EngineOptions& options = {});

/// Log-refined Rellich inequality on the ball:
///   lhs as above,
///   rhs = C_{n,gamma} * sum_j I0_j
///       + [(n-gamma)^2 + (n+gamma-4)^2]/16 * sum_j I0W_j.
InequalityReport rellich_report(const ModeExpansion& expansion, const EngineOptions& options = {});

/// Direct 2-D disk evaluation of int |x|^gamma |Laplacian(F(r) phi_j)|^2 for
/// the explicit circle harmonics (cosine branch, unit L^2 norm): the polar
/// Laplacian is applied analytically and the angular integral collapses to 1,
/// leaving  int r^(gamma+1) (F'' + F'/r - j^2 F / r^2)^2 dr.
/// Independent cross-check of mode_laplacian_energy in dimension n = 2.
double disk_laplacian_energy(const RadialProfile& profile, int j, double gamma,
                             double rel_tol = 1e-10);

}  // namespace hrlab

#endif  // HRLAB_ENGINE_HPP
