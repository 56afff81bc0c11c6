#ifndef HRLAB_SHARP_CONSTANTS_HPP
#define HRLAB_SHARP_CONSTANTS_HPP

namespace hrlab {

/// Minimum of a spectral sequence over the sphere-Laplacian degrees.
///
/// tail_certified means the scan saw the sequence increase for three
/// consecutive steps past the running minimum (with j >= 64 scanned), which
/// certifies the minimum because both sequences are eventually increasing in
/// lambda_j. When the scan cap (j = 10^4) is hit without certification the
/// result is returned with tail_certified = false rather than failing.
struct ConstantResult {
  double value = 0.0;
  int argmin_j = 0;      // smallest minimizing degree
  int scanned_up_to = 0; // largest degree evaluated
  bool tail_certified = false;
};

/// Per-degree coefficient alpha_{n,gamma,lambda_j} of the Hardy--Rellich
/// inequality:
///   j = 0:   (n-gamma)^2 / 4
///   j >= 1:  [ (n+gamma-4)(n-gamma)/4 + lambda_j ]^2
///            / [ (n+gamma-4)^2/4 + lambda_j ]
double alpha_coefficient(int n, double gamma, int j);

/// Sharp Hardy--Rellich constant A_{n,gamma} = min_j alpha_{n,gamma,lambda_j}.
ConstantResult hardy_rellich_constant(int n, double gamma);

/// Sharp Rellich constant
///   C_{n,gamma} = min_j [ (n-2)^2/4 - (gamma-2)^2/4 + lambda_j ]^2.
ConstantResult rellich_constant(int n, double gamma);

/// Per-degree summand of the Rellich constant (exposed for tests and sweeps).
double rellich_summand(int n, double gamma, int j);

struct ConstantInequalityReport {
  bool holds = false;
  double min_slack = 0.0; // most negative rhs - lhs + tol margin observed
  int worst_j = 0;
  ConstantResult constant; // the A_{n,gamma} used
};

/// Checks, for every j in {0,...,j_max},
///   lambda_j * A  <=  (n+gamma-4)^2/4 * [ (n-gamma)^2/4 + 2 lambda_j - A ]
///                     + lambda_j * [ lambda_j + (n+gamma-4)(2-gamma) ]
/// with absolute tolerance tol_scale * (1 + |lhs| + |rhs|). This is the
/// constant-level inequality that makes the mode-wise chain of the
/// Hardy--Rellich proof close; it is pure double algebra, no quadrature.
ConstantInequalityReport check_constant_inequality(int n, double gamma, int j_max,
                                                   double tol_scale = 1e-9);

}  // namespace hrlab

#endif  // HRLAB_SHARP_CONSTANTS_HPP
