#pragma once

#include <map>
#include <string>

#include "cmsym/frac.hpp"
#include "cmsym/mpoly.hpp"
#include "cmsym/partition.hpp"

namespace cmsym {

/// Element of the algebra of symmetric functions in the power-sum basis:
/// a finite combination of p_lambda = p_{lambda_1} p_{lambda_2} ...
/// The empty partition indexes the constant term. p0 is a coefficient
/// parameter, never a generator.
class SymFun {
 public:
  using TermMap = std::map<Partition, Frac>;

  SymFun() = default;
  static SymFun constant(const Frac& c);
  static SymFun power_sum(int a);
  static SymFun monomial(const Partition& lambda, const Frac& c = Frac(1L));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Frac coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Frac& c);

  SymFun operator-() const;
  SymFun& operator+=(const SymFun& o);
  SymFun& operator-=(const SymFun& o);
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(const SymFun& a, const SymFun& b);
  SymFun scaled(const Frac& c) const;

  /// Highest |lambda| present; -1 for zero.
  int max_degree() const;
  /// Terms with |lambda| <= d.
  SymFun truncated(int d) const;
  /// Terms with |lambda| == e.
  SymFun homogeneous_component(int e) const;

  SymFun map_coefficients(const std::function<Frac(const Frac&)>& fn) const;

  friend bool operator==(const SymFun& a, const SymFun& b);
  friend bool operator!=(const SymFun& a, const SymFun& b) { return !(a == b); }

 private:
  TermMap terms_;
};

/// "c * p2*p1 + ..." in the canonical partition order.
std::string to_string(const SymFun& f);

/// Evaluation homomorphism p_l -> z1^l + ... + zN^l, p0 -> N.
MPoly phi_N(const SymFun& f, int N);

/// Coordinates in the monomial symmetric function basis m_lambda.
struct MBasisExpansion {
  std::map<Partition, Frac> coeffs;
  int degree = 0;

  Frac coefficient(const Partition& lambda) const;
  friend bool operator==(const MBasisExpansion& a, const MBasisExpansion& b);
};

/// Coefficient of m_mu in p_lambda: the coefficient of z^mu in phi_N(p_lambda)
/// for any N >= length(mu). Zero unless |lambda| == |mu|.
Rational power_to_monomial_coefficient(const Partition& lambda, const Partition& mu);

/// Change of basis, graded component by graded component, for |lambda| <= d.
MBasisExpansion p_to_m(const SymFun& f, int d);
SymFun m_to_p(const MBasisExpansion& e);
/// m_lambda expressed in power sums.
SymFun monomial_symmetric(const Partition& lambda);

}  // namespace cmsym
