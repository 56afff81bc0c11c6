#ifndef HRLAB_ERRORS_HPP
#define HRLAB_ERRORS_HPP

#include <stdexcept>

namespace hrlab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension n < 2.
class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

/// Ball radius R <= 0.
class NonpositiveRadius : public Error {
 public:
  using Error::Error;
};

/// Log anchor eta below the admissibility threshold e_N * R.
class EtaBelowThreshold : public Error {
 public:
  using Error::Error;
};

/// Iterated exponential requested past double range (e_5 overflows).
class DepthOverflow : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Profile support is degenerate or touches the domain boundary.
class BadSupport : public Error {
 public:
  using Error::Error;
};

/// Bump endpoint exponent p < 3 (second derivative would not vanish).
class SmoothnessTooLow : public Error {
 public:
  using Error::Error;
};

/// Exact-integration oracle asked for a non-integer power exponent.
class NonIntegerExponent : public Error {
 public:
  using Error::Error;
};

/// Rayleigh-type quotient with vanishing denominator.
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

/// Sharp-constant scan reached its cap without certifying the tail.
class TailNotCertified : public Error {
 public:
  using Error::Error;
};

/// Exact integer computation exceeds the 64-bit result type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace hrlab

#endif  // HRLAB_ERRORS_HPP
