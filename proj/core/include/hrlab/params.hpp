#ifndef HRLAB_PARAMS_HPP
#define HRLAB_PARAMS_HPP

#include "hrlab/log_weights.hpp"

namespace hrlab {

/// Global evaluation context shared by every inequality instance:
/// dimension n >= 2, power-weight exponent gamma, refinement depth N
/// (0 disables the log terms), ball radius R > 0 and log anchor eta.
struct Parameters {
  int n = 2;
  double gamma = 0.0;
  int depth = 0;       // N
  double radius = 1.0; // R
  double eta = 1.0;
};

/// A Parameters tuple that passed validate_params. Immutable; every module
/// downstream takes this type so invalid tuples cannot reach an evaluation.
class ValidatedParameters {
 public:
  int n() const { return p_.n; }
  double gamma() const { return p_.gamma; }
  int depth() const { return p_.depth; }
  double radius() const { return p_.radius; }
  double eta() const { return p_.eta; }
  const Parameters& raw() const { return p_; }

  LogWeightSpec log_weight_spec() const { return LogWeightSpec{p_.depth, p_.eta, p_.radius}; }

 private:
  friend ValidatedParameters validate_params(const Parameters& p);
  explicit ValidatedParameters(const Parameters& p) : p_(p) {}
  Parameters p_;
};

/// Checks all invariants:
///   n >= 2                    (DimensionTooSmall)
///   R > 0                     (NonpositiveRadius)
///   0 <= N <= 4, eta > 0      (DomainError)
///   N >= 1 implies eta >= e_N * R   (EtaBelowThreshold)
ValidatedParameters validate_params(const Parameters& p);

}  // namespace hrlab

#endif  // HRLAB_PARAMS_HPP
