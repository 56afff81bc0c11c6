#ifndef HRLAB_SPECTRUM_HPP
#define HRLAB_SPECTRUM_HPP

#include <cstdint>

namespace hrlab {

/// One eigenvalue of the sphere Laplacian on S^{n-1}: degree j, eigenvalue
/// lambda_j = j(j+n-2) and multiplicity m(lambda_j). Stands in for the whole
/// degree-j eigenspace; only lambda and orthonormality ever enter the
/// quadratic functionals, so the eigenfunctions themselves are never built.
struct SphericalMode {
  int degree = 0;             // j
  double lambda = 0.0;        // j(j+n-2)
  std::uint64_t mult = 1;     // m(lambda_j)
};

/// lambda_j = j(j+n-2), exact (computed in integer arithmetic).
double eigenvalue(int n, int j);

/// Multiplicity m(lambda_j) = (2j+n-2)/(j+n-2) * binom(j+n-2, n-2), computed
/// exactly in 128-bit integer arithmetic. The degenerate case n=2, j=0 (0/0
/// in the formula) returns 1: the constant function spans that eigenspace.
/// Throws OverflowError when the exact value does not fit in 64 bits.
std::uint64_t multiplicity(int n, int j);

SphericalMode make_mode(int n, int j);

}  // namespace hrlab

#endif  // HRLAB_SPECTRUM_HPP
