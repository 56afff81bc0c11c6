#include "hrlab/params.hpp"

#include <string>

#include "hrlab/errors.hpp"

namespace hrlab {

ValidatedParameters validate_params(const Parameters& p) {
  if (p.n < 2) {
    throw DimensionTooSmall("n = " + std::to_string(p.n) + ", need n >= 2");
  }
  if (!(p.radius > 0.0)) {
    throw NonpositiveRadius("R = " + std::to_string(p.radius) + ", need R > 0");
  }
  if (p.depth < 0 || p.depth > 4) {
    throw DomainError("refinement depth N must lie in [0, 4] (e_5 overflows)");
  }
  if (!(p.eta > 0.0)) {
    throw DomainError("eta must be positive");
  }
  if (p.depth >= 1) {
    const double threshold = iter_exp(p.depth) * p.radius;
    if (p.eta < threshold) {
      throw EtaBelowThreshold("eta = " + std::to_string(p.eta) + " is below e_N * R = " +
                              std::to_string(threshold));
    }
  }
  return ValidatedParameters(p);
}

}  // namespace hrlab
