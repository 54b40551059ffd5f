#pragma once

#include <vector>

#include "cmsym/finite_models.hpp"
#include "cmsym/inf_operators.hpp"
#include "cmsym/linalg.hpp"

namespace cmsym {

/// Eigenfunction of an infinite operator, monic in m_label.
struct EigenResult {
  Partition label;
  Family family = Family::TrigA;
  Frac eigenvalue;
  MBasisExpansion expansion;

  SymFun as_symfun() const { return m_to_p(expansion); }
};

struct SuperJacobi {
  Partition label;
  int m = 1;
  int n = 0;
  /// Values for k, p, q; free symbols are omitted.
  Bindings parameters;
  MPoly value;
};

/// Basis of operator_matrix: m_lambda with |lambda| = d (trigA), or all
/// |lambda| <= d, highest degree first (trigBC); dominant first within a
/// degree, reverse lexicographic as the total refinement.
std::vector<Partition> matrix_basis(Family family, int d);

/// Row lambda holds the coefficients of L m_lambda in the m basis, columns in
/// matrix_basis order. Upper triangular for trigA and trigBC.
Matrix<Frac> operator_matrix(const InfOperator& op, int d);

/// Jack symmetric function from the trigA operator.
EigenResult jack(const Partition& lambda, const InfOperator& op = InfOperator(Family::TrigA));
/// Jacobi symmetric function from the trigBC operator.
EigenResult jacobi(const Partition& lambda, const InfOperator& op = InfOperator(Family::TrigBC));

/// phi_{m,n}(jacobi(lambda)) with h = -k m - n - p/2 - q and p0 = m + n/k bound
/// before the solve. ResonanceError and PoleError propagate.
SuperJacobi super_jacobi(const Partition& lambda, const DeformedContext& ctx);

enum class EulerVariant { Odd, Even };

/// super_jacobi with symbolic (k, p, q), followed by the limits
/// k -> -1, then p -> -1 (odd) or 0 (even), then q -> 0.
MPoly specialize_euler(const Partition& lambda, int m, int n, EulerVariant variant);

/// apply_inf(op, f) == eigenvalue * f with f the expansion in power sums.
bool verify_eigen(const InfOperator& op, const EigenResult& r, int degree_cap = -1);

}  // namespace cmsym
