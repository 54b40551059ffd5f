#pragma once

#include <map>
#include <utility>

#include "cmsym/inf_operators.hpp"

namespace cmsym {

/// Finite sum of c * p_lambda d_mu in normal order (all p to the left of all
/// d), with d_a = a d/dp_a.
class NormalSymbol {
 public:
  using Key = std::pair<Partition, Partition>;
  using TermMap = std::map<Key, Frac>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Frac coefficient(const Partition& lambda, const Partition& mu) const;
  void add_term(const Partition& lambda, const Partition& mu, const Frac& c);

  NormalSymbol& operator+=(const NormalSymbol& o);
  NormalSymbol& operator-=(const NormalSymbol& o);
  friend NormalSymbol operator+(NormalSymbol a, const NormalSymbol& b) { return a += b; }
  friend NormalSymbol operator-(NormalSymbol a, const NormalSymbol& b) { return a -= b; }
  friend bool operator==(const NormalSymbol& a, const NormalSymbol& b);

  /// Terms with |lambda| <= dp and |mu| <= dd.
  NormalSymbol window(int dp, int dd) const;

 private:
  TermMap terms_;
};

/// Action of the symbol on a symmetric function.
SymFun apply_symbol(const NormalSymbol& s, const SymFun& f);

/// Terms p_lambda d_mu of the operator with |lambda| <= dp, |mu| <= dd.
NormalSymbol normal_symbol(const InfOperator& op, int dp, int dd);

/// Normal-ordered form of d_lambda p_mu (derivatives on the left), using
/// d_a p_b - p_b d_a = a delta_ab.
NormalSymbol reorder(const Partition& d_left, const Partition& p_right, const Frac& c);

/// Outcome of the p_a <-> -k^{-1} d_a swap on a trigA window.
struct FourierReport {
  int cutoff = 0;
  /// The p_{a+b} d_a d_b block maps onto the -k p_a p_b d_{a+b} block.
  bool two_derivative_block_maps_to_two_p_block = false;
  /// The -k p_a p_b d_{a+b} block maps onto the p_{a+b} d_a d_b block.
  bool two_p_block_maps_to_two_derivative_block = false;
  /// The diagonal block c_a p_a d_a maps to itself plus constants.
  bool diagonal_block_preserved = false;
  /// Additive constant produced by reordering the diagonal term at index a.
  std::map<int, Frac> reordering_constants;

  bool quadratic_blocks_exchange() const {
    return two_derivative_block_maps_to_two_p_block && two_p_block_maps_to_two_derivative_block;
  }
};

/// Substitutes p_a -> -k^{-1} d_a, d_a -> -k p_a term by term in the
/// (cutoff, cutoff) window of a trigA symbol and re-normal-orders.
FourierReport fourier_swap_check(const InfOperator& op, int cutoff);

}  // namespace cmsym
