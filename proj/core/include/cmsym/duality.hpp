#pragma once

#include <string>
#include <vector>

#include "cmsym/inf_operators.hpp"

namespace cmsym {

/// A parameter map x -> x_hat together with the overall scalar c such that
/// sigma^{-1} L_x sigma = c L_{x_hat}, where sigma: p_a -> k p_a (a >= 1).
struct DualityCandidate {
  Frac c;
  Bindings map;
  /// Exact agreement on every p_lambda with |lambda| <= degree.
  bool verified = false;
  /// The map composed with itself is the identity.
  bool involutive = false;
};

struct ScalingDualityReport {
  Family family = Family::TrigA;
  int degree = 0;
  /// The selected candidate (see scaling_conjugate_bc for the rule).
  DualityCandidate fitted;
  /// Further candidates allowed by the degree <= 2 fit.
  std::vector<DualityCandidate> alternatives;
  /// TrigA: the printed map k -> 1/k, p0 -> p0/k, tested with the fitted c.
  DualityCandidate printed;
  /// TrigBC: p_hat = p/k, 2 q_hat + 1 = (2q+1)/k, 2 h_hat - 1 = (2h-1)/k.
  bool matches_printed_relations = false;

  bool verified() const { return fitted.verified; }
};

/// sigma^{-1} L sigma for symbolic (k, p0); the map is fitted on degrees
/// <= 2 and checked on all p_lambda with |lambda| <= D. Throws
/// DualityFailure when the fit has no solution.
ScalingDualityReport scaling_conjugate(const InfOperator& op, int D);

/// Same contract for the BC operator with symbolic (k, p, q, h) and
/// p0 = -(h + p/2 + q)/k. The degree <= 2 fit determines c, k_hat, h_hat and
/// leaves a quadratic for p0_hat; both roots are verified. The selected
/// candidate is the one that scales p0 like the other generators
/// (p0_hat = k p0, the same rule the trigA fit produces); the other root is
/// reported under `alternatives`.
ScalingDualityReport scaling_conjugate_bc(const InfOperator& op, int D);

/// "k -> 1/k, p0 -> k*p0".
std::string describe(const Bindings& map);

}  // namespace cmsym
