#ifndef HRLAB_LOG_WEIGHTS_HPP
#define HRLAB_LOG_WEIGHTS_HPP

namespace hrlab {

/// Iterated exponential e_j: e_0 = 0, e_{j+1} = exp(e_j).
///
/// Only e_0..e_4 are representable in double precision (e_4 ~ 3.8e6,
/// e_5 overflows); throws DepthOverflow for j >= 5 and DomainError for j < 0.
double iter_exp(int j);

/// Iterated logarithm ln_k(x): ln_1 = ln, ln_{k+1} = ln o ln_k.
///
/// Requires k >= 1. Every intermediate before the final log must stay
/// positive (DomainError otherwise); the final value may be <= 0.
double iter_log(int k, double x);

/// Depth, anchor and domain radius of an iterated-log refinement weight.
///
/// Admissibility (depth >= 1 implies eta >= e_depth * radius) guarantees
/// ln_p(eta/r) > e_{depth-p} >= 0 for all p <= depth and r in (0, radius),
/// so every factor below is strictly positive and finite.
struct LogWeightSpec {
  int depth = 0;       // N; 0 means "no log terms"
  double eta = 1.0;    // anchor
  double radius = 1.0; // domain radius R

  bool admissible() const;
};

/// Throws DomainError when a LogWeightSpec is not admissible.
void require_admissible(const LogWeightSpec& spec);

/// W_N(r) = sum_{k=1}^{N} prod_{p=1}^{k} [ln_p(eta/r)]^{-2}.
///
/// Returns 0 for depth 0. Requires 0 < r < radius and an admissible spec.
/// Evaluated incrementally: one log per level, a running product of the
/// inverse squares, O(N) per point.
double log_weight_sum(const LogWeightSpec& spec, double r);

/// Same tower with first powers: sum_{k=1}^{N} prod_{p=1}^{k} [ln_p(eta/r)]^{-1}.
/// This is the zeroth-order symbol appearing in the first-order factorization
/// operator; see engine.hpp.
double log_chain_sum(const LogWeightSpec& spec, double r);

}  // namespace hrlab

#endif  // HRLAB_LOG_WEIGHTS_HPP
