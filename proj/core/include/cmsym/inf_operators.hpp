#pragma once

#include <optional>
#include <string>

#include "cmsym/frac.hpp"
#include "cmsym/symfun.hpp"

namespace cmsym {

enum class Family { TrigA, RatA, RatB, TrigBC };

/// CLI names: "trigA", "ratA", "ratB", "trigBC".
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// One of the four infinite-dimensional CMS operators with some of its
/// parameters bound. Unbound parameters act as free symbols. p_0 inside the
/// formulas always means the parameter p0.
class InfOperator {
 public:
  explicit InfOperator(Family family, Bindings bindings = {});

  Family family() const { return family_; }
  const Bindings& bindings() const { return bindings_; }
  /// Bound value, or the free symbol.
  Frac param(Param p) const;
  InfOperator with(Param p, const Frac& value) const;

 private:
  Family family_;
  Bindings bindings_;
};

/// Image of f (truncated at degree_cap when degree_cap >= 0).
SymFun apply_inf(const InfOperator& op, const SymFun& f, int degree_cap = -1);

/// P = sum_a p_a d_a, the grading operator: P p_lambda = |lambda| p_lambda.
SymFun momentum(const SymFun& f);

/// [op, P] p_lambda == 0 for all |lambda| <= D. Only defined for TrigA;
/// throws std::invalid_argument for the other families.
bool commutator_vanishes(const InfOperator& op, int D);

/// d_a p_lambda with d_a = a d/dp_a.
SymFun differentiate(const Partition& lambda, int a);

}  // namespace cmsym
