#include "hrlab/log_weights.hpp"

#include <cmath>
#include <string>

#include "hrlab/errors.hpp"

namespace hrlab {

double iter_exp(int j) {
  if (j < 0) throw DomainError("iter_exp: negative depth");
  if (j >= 5) throw DepthOverflow("iter_exp: e_" + std::to_string(j) + " overflows double precision");
  // e_0..e_4; evaluated once (admissibility checks sit on hot paths)
  static const double table[5] = {0.0, 1.0, std::exp(1.0), std::exp(std::exp(1.0)),
                                  std::exp(std::exp(std::exp(1.0)))};
  return table[j];
}

double iter_log(int k, double x) {
  if (k < 1) throw DomainError("iter_log: depth must be >= 1");
  double v = x;
  for (int i = 1; i <= k; ++i) {
    if (!(v > 0.0)) {
      throw DomainError("iter_log: intermediate ln_" + std::to_string(i - 1) +
                        " is nonpositive, log undefined");
    }
    v = std::log(v);
  }
  return v;
}

bool LogWeightSpec::admissible() const {
  if (depth < 0 || !(radius > 0.0)) return false;
  if (depth == 0) return true;
  if (depth >= 5) return false;
  return eta >= iter_exp(depth) * radius;
}

void require_admissible(const LogWeightSpec& spec) {
  if (!spec.admissible()) {
    throw DomainError("log weight spec not admissible: need eta >= e_N * R with N in [0,4]");
  }
}

namespace {

// Shared tower walk. `power` is the exponent applied to each factor's inverse.
template <int Power>
double tower_sum(const LogWeightSpec& spec, double r) {
  if (spec.depth == 0) return 0.0;
  require_admissible(spec);
  if (!(r > 0.0) || !(r < spec.radius)) {
    throw DomainError("log weight evaluated outside (0, R)");
  }
  double level = spec.eta / r;  // becomes ln_p(eta/r) after p logs
  double running = 1.0;
  double sum = 0.0;
  for (int p = 1; p <= spec.depth; ++p) {
    level = std::log(level);
    if (!(level > 0.0)) {
      throw DomainError("log weight tower left the positive domain (admissibility bypassed?)");
    }
    if constexpr (Power == 2) {
      running /= level * level;
    } else {
      running /= level;
    }
    sum += running;
  }
  return sum;
}

}  // namespace

double log_weight_sum(const LogWeightSpec& spec, double r) { return tower_sum<2>(spec, r); }

double log_chain_sum(const LogWeightSpec& spec, double r) { return tower_sum<1>(spec, r); }

}  // namespace hrlab
