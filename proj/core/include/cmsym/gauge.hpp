#pragma once

#include "cmsym/finite_models.hpp"
#include "cmsym/inf_operators.hpp"

namespace cmsym {

// Ground-state gauge of the finite Schroedinger operators L = sum m_i d_i^2 - V
// (masses 1, and k on the y-coordinates of the deformed model). With
// G_i = d_i log Psi0 the conjugated operator is
//   Psi0^{-1} L Psi0 = sum m_i (d_i^2 + 2 G_i d_i) + R,
//   R = sum m_i (d_i G_i + G_i^2) - V,
// and the gauge is valid when R is a constant. Hyperbolic functions are
// written in X_i = e^{2 x_i}, which makes every quantity a rational function.

struct GaugeCheck {
  bool constant = false;
  /// R as a rational function of the coordinates and parameters.
  Frac remainder;
};

/// Finite models of the four families; params supplies values for k, p, q, l
/// (missing ones stay symbolic). N <= 10.
GaugeCheck gauge_remainder(Family family, int N, const Bindings& params = {});
GaugeCheck gauge_remainder(const DeformedContext& ctx);

/// The gauged operator sum m_i (d_i^2 + 2 G_i d_i), applied to f written in
/// the original coordinates (z = e^{2x}, z = x, z = x^2 or u = 2 sinh^2 x),
/// equals the implemented finite operator times its normalisation (1 for
/// ratA, 4 otherwise).
bool gauge_matches_operator(Family family, int N, const MPoly& f, const Bindings& params = {});
bool gauge_matches_operator(const DeformedContext& ctx, const MPoly& f);

}  // namespace cmsym
