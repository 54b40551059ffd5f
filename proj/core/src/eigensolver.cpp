#include "cmsym/eigensolver.hpp"

#include <stdexcept>

#include "cmsym/duality.hpp"
#include "cmsym/errors.hpp"

namespace cmsym {

std::vector<Partition> matrix_basis(Family family, int d) {
  switch (family) {
    case Family::TrigA: return partitions_of(d);
    case Family::TrigBC: return partitions_up_to(d);
    default: throw std::invalid_argument("triangular bases exist only for trigA and trigBC");
  }
}

namespace {

// L m_lambda in the m basis.
std::map<Partition, Frac> image_row(const InfOperator& op, const Partition& lambda) {
  SymFun image = apply_inf(op, monomial_symmetric(lambda));
  return p_to_m(image, lambda.weight()).coeffs;
}

// mu strictly below lambda in the order the eigenfunction may use.
bool below(Family family, const Partition& mu, const Partition& lambda) {
  if (mu == lambda) return false;
  if (mu.weight() != lambda.weight()) return family == Family::TrigBC && mu.weight() < lambda.weight();
  return dominated_by(mu, lambda);
}

// Names the symbolic diagonal difference, whose zero set is the resonant locus.
std::string resonance_message(const InfOperator& op, const Partition& lambda, const Partition& mu) {
  InfOperator generic(op.family());
  auto diagonal = [&](const Partition& l) {
    auto row = image_row(generic, l);
    auto it = row.find(l);
    return it == row.end() ? Frac() : it->second;
  };
  return "resonance between " + to_string(lambda) + " and " + to_string(mu) + ": eigenvalue difference " +
         to_string(diagonal(lambda) - diagonal(mu)) + " vanishes at " + describe(op.bindings());
}

EigenResult solve(const InfOperator& op, const Partition& lambda) {
  Family family = op.family();
  auto basis = matrix_basis(family, lambda.weight());
  std::map<Partition, std::map<Partition, Frac>> rows;
  rows.emplace(lambda, image_row(op, lambda));
  auto entry = [&](const Partition& row, const Partition& col) {
    const auto& r = rows.at(row);
    auto it = r.find(col);
    return it == r.end() ? Frac() : it->second;
  };
  Frac e = entry(lambda, lambda);

  EigenResult result;
  result.label = lambda;
  result.family = family;
  result.eigenvalue = e;
  result.expansion.degree = lambda.weight();
  result.expansion.coeffs[lambda] = Frac(1L);

  bool reached = false;
  for (const auto& mu : basis) {
    if (mu == lambda) {
      reached = true;
      continue;
    }
    if (!reached || !below(family, mu, lambda)) continue;
    rows.emplace(mu, image_row(op, mu));
    Frac diff = e - entry(mu, mu);
    if (diff.is_zero()) throw ResonanceError(resonance_message(op, lambda, mu));
    Frac sum;
    for (const auto& [nu, c] : result.expansion.coeffs) sum += c * entry(nu, mu);
    if (!sum.is_zero()) result.expansion.coeffs[mu] = sum / diff;
  }
  return result;
}

}  // namespace

Matrix<Frac> operator_matrix(const InfOperator& op, int d) {
  auto basis = matrix_basis(op.family(), d);
  Matrix<Frac> a(basis.size(), std::vector<Frac>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto row = image_row(op, basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto it = row.find(basis[j]);
      if (it != row.end()) a[i][j] = it->second;
    }
  }
  return a;
}

EigenResult jack(const Partition& lambda, const InfOperator& op) {
  if (op.family() != Family::TrigA) throw std::invalid_argument("jack expects the trigA operator");
  return solve(op, lambda);
}

EigenResult jacobi(const Partition& lambda, const InfOperator& op) {
  if (op.family() != Family::TrigBC) throw std::invalid_argument("jacobi expects the trigBC operator");
  return solve(op, lambda);
}

SuperJacobi super_jacobi(const Partition& lambda, const DeformedContext& ctx) {
  if (ctx.n > 0 && ctx.k.is_zero()) throw PoleError("phi_{m,n} divides by k, which is bound to 0");
  Bindings b{{Param::k, ctx.k}, {Param::p, ctx.p}, {Param::q, ctx.q}, {Param::h, ctx.theorem_h()},
             {Param::p0, ctx.p0_value()}};
  EigenResult j = jacobi(lambda, InfOperator(Family::TrigBC, b));
  SuperJacobi out;
  out.label = lambda;
  out.m = ctx.m;
  out.n = ctx.n;
  if (ctx.k != Frac::param(Param::k)) out.parameters.emplace(Param::k, ctx.k);
  if (ctx.p != Frac::param(Param::p)) out.parameters.emplace(Param::p, ctx.p);
  if (ctx.q != Frac::param(Param::q)) out.parameters.emplace(Param::q, ctx.q);
  out.value = phi_mn(j.as_symfun(), ctx);
  return out;
}

MPoly specialize_euler(const Partition& lambda, int m, int n, EulerVariant variant) {
  SuperJacobi sj = super_jacobi(lambda, DeformedContext(m, n));
  Rational p_value = variant == EulerVariant::Odd ? Rational(-1) : Rational(0);
  return sj.value.map_coefficients([&](const Frac& c) {
    try {
      Frac v = limit_along_parameter(c, Param::k, Rational(-1));
      v = limit_along_parameter(v, Param::p, p_value);
      return limit_along_parameter(v, Param::q, Rational(0));
    } catch (const PoleError& err) {
      throw PoleError("coefficient " + to_string(c) + " has a genuine pole: " + err.what());
    }
  });
}

bool verify_eigen(const InfOperator& op, const EigenResult& r, int degree_cap) {
  SymFun f = r.as_symfun();
  return apply_inf(op, f, degree_cap) == f.scaled(r.eigenvalue);
}

}  // namespace cmsym
