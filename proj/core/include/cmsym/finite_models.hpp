#pragma once

#include <vector>

#include "cmsym/frac.hpp"
#include "cmsym/mpoly.hpp"
#include "cmsym/symfun.hpp"

namespace cmsym {

/// Sizes and parameters of a deformed BC(m,n) model. Parameters default to
/// the free symbols k, p, q; any of them may be bound to a rational.
struct DeformedContext {
  int m = 1;
  int n = 0;
  Frac k = Frac::param(Param::k);
  Frac p = Frac::param(Param::p);
  Frac q = Frac::param(Param::q);

  DeformedContext() = default;
  DeformedContext(int m_, int n_);
  DeformedContext(int m_, int n_, Frac k_, Frac p_, Frac q_);

  VarLayout layout() const { return VarLayout::uv(m, n); }
  /// h = -k m - n - p/2 - q.
  Frac theorem_h() const;
  /// m + n/k; throws PoleError at k = 0 when n > 0.
  Frac p0_value() const;
  /// Values for k, p, q (omitting free symbols) plus h and p0.
  Bindings bindings() const;
};

// Gauged finite operators. All inputs must be symmetric in their variable
// groups; the antisymmetric numerators are divided exactly.

/// Sum (z_i d_i)^2 f - k sum_{i<j} (z_i + z_j)/(z_i - z_j) (z_i d_i - z_j d_j) f.
MPoly apply_cms_trig_A(const MPoly& f, int N, const Frac& k);
/// Laplacian f - 2k sum_{i<j} (d_i - d_j) f / (x_i - x_j).
MPoly apply_gauged_rational_A(const MPoly& f, int N, const Frac& k);
/// In z = x^2, divided by 4:
/// sum z_i d_i^2 f + (1/2 - l) d_i f - 2k sum_{i<j} (z_i d_i - z_j d_j) f / (z_i - z_j).
MPoly apply_gauged_rational_B(const MPoly& f, int N, const Frac& k, const Frac& l);
/// In u = 2 sinh^2 x, divided by 4, with D_i = u_i (u_i + 2) d_i:
/// sum D_i d_i f + [(1-p-2q) u_i + (1-2p-2q)] d_i f - 2k sum_{i<j} (D_i - D_j) f / (u_i - u_j).
MPoly apply_gauged_bc_trig(const MPoly& f, int N, const Frac& k, const Frac& p, const Frac& q);
/// Deformed BC(m,n) operator in u = 2 sinh^2 x, v = 2 sinh^2 y, divided by 4.
/// Throws NotInDeformedAlgebra when f fails the membership test.
MPoly apply_gauged_deformed_bc(const MPoly& f, const DeformedContext& ctx);

/// p_a -> sum u_i^a + k^{-1} sum v_j^a, p0 -> m + n/k; k, p, q in the
/// coefficients are replaced by the context's values.
MPoly phi_mn(const SymFun& f, const DeformedContext& ctx);

/// Separately symmetric in u and v, and u_i d f/du_i - k v_j d f/dv_j vanishes
/// on every hyperplane u_i = v_j.
bool is_in_deformed_algebra(const MPoly& f, const DeformedContext& ctx);

/// A homomorphism out of the algebra of symmetric functions: phi_N or phi_{m,n}.
class Restriction {
 public:
  static Restriction finite(int N);
  static Restriction deformed(const DeformedContext& ctx);

  MPoly operator()(const SymFun& f) const;
  bool is_deformed() const { return deformed_; }
  int N() const { return N_; }
  const DeformedContext& context() const { return ctx_; }

 private:
  bool deformed_ = false;
  int N_ = 1;
  DeformedContext ctx_;
};

/// Basis of the kernel of `hom` on homogeneous symmetric functions of each
/// degree 1..d, degree by degree, by exact elimination over the
/// coefficient field with columns p_lambda in dominant-first order.
std::vector<SymFun> kernel_basis(const Restriction& hom, int d);

}  // namespace cmsym
