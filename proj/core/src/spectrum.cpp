#include "hrlab/spectrum.hpp"

#include <limits>
#include <string>

#include "hrlab/errors.hpp"

namespace hrlab {

namespace {

using u128 = unsigned __int128;

constexpr u128 kU64Max = std::numeric_limits<std::uint64_t>::max();

// binom(top, k) by the multiplicative formula; every intermediate division is
// exact because each prefix is itself a binomial coefficient.
u128 binomial_u128(std::int64_t top, std::int64_t k) {
  if (k < 0 || k > top) return 0;
  if (k > top - k) k = top - k;
  u128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const u128 factor = static_cast<u128>(top - k + i);
    if (acc > static_cast<u128>(-1) / factor) {
      throw OverflowError("binomial coefficient exceeds 128-bit range");
    }
    acc = acc * factor / static_cast<u128>(i);
  }
  return acc;
}

}  // namespace

double eigenvalue(int n, int j) {
  if (n < 2) throw DimensionTooSmall("eigenvalue: n must be >= 2");
  if (j < 0) throw DomainError("eigenvalue: j must be >= 0");
  return static_cast<double>(static_cast<std::int64_t>(j) * (j + n - 2));
}

std::uint64_t multiplicity(int n, int j) {
  if (n < 2) throw DimensionTooSmall("multiplicity: n must be >= 2");
  if (j < 0) throw DomainError("multiplicity: j must be >= 0");
  if (n == 2 && j == 0) return 1;  // formula is 0/0; the constant spans the eigenspace

  const std::int64_t top = static_cast<std::int64_t>(j) + n - 2;
  const u128 binom = binomial_u128(top, n - 2);
  const u128 numerator_factor = static_cast<u128>(2 * static_cast<std::int64_t>(j) + n - 2);
  if (binom != 0 && numerator_factor > static_cast<u128>(-1) / binom) {
    throw OverflowError("multiplicity exceeds 128-bit intermediate range");
  }
  const u128 numerator = numerator_factor * binom;
  const u128 denominator = static_cast<u128>(top);
  // (2j+n-2) * binom(j+n-2, n-2) is always divisible by (j+n-2).
  const u128 m = numerator / denominator;
  if (m * denominator != numerator) {
    throw Error("multiplicity: internal exact-division failure");
  }
  if (m > kU64Max) {
    throw OverflowError("multiplicity(" + std::to_string(n) + ", " + std::to_string(j) +
                        ") does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(m);
}

SphericalMode make_mode(int n, int j) {
  return SphericalMode{j, eigenvalue(n, j), multiplicity(n, j)};
}

}  // namespace hrlab
