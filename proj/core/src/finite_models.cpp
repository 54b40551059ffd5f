#include "cmsym/finite_models.hpp"

#include <map>

#include "cmsym/errors.hpp"
#include "cmsym/linalg.hpp"

namespace cmsym {

DeformedContext::DeformedContext(int m_, int n_) : m(m_), n(n_) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("deformed context needs m, n >= 0 and m + n >= 1");
  if (m + n > static_cast<int>(kMaxVars)) throw std::invalid_argument("too many variables");
}

DeformedContext::DeformedContext(int m_, int n_, Frac k_, Frac p_, Frac q_) : DeformedContext(m_, n_) {
  k = std::move(k_);
  p = std::move(p_);
  q = std::move(q_);
}

Frac DeformedContext::theorem_h() const {
  return -(k * Frac(static_cast<long>(m))) - Frac(static_cast<long>(n)) - p * Frac(Rational(1, 2)) - q;
}

Frac DeformedContext::p0_value() const {
  Frac v(static_cast<long>(m));
  if (n > 0) v += Frac(static_cast<long>(n)) / k;
  return v;
}

Bindings DeformedContext::bindings() const {
  Bindings b;
  if (k != Frac::param(Param::k)) b.emplace(Param::k, k);
  if (p != Frac::param(Param::p)) b.emplace(Param::p, p);
  if (q != Frac::param(Param::q)) b.emplace(Param::q, q);
  b.emplace(Param::h, theorem_h());
  b.emplace(Param::p0, p0_value());
  return b;
}

namespace {

// z_i d/dz_i
MPoly euler(const MPoly& f, int i) {
  MPoly r(f.layout());
  auto s = static_cast<std::size_t>(i);
  for (const auto& [m, c] : f.terms())
    if (m[s]) r.add_term(m, c * Frac(static_cast<long>(m[s])));
  return r;
}

// u_i (u_i + 2) d/du_i
MPoly bc_flow(const MPoly& f, int i) {
  MPoly d = f.derivative(i);
  return d.times_variable(i, 2) + d.times_variable(i).scaled(Frac(2L));
}

void require_symmetric(const MPoly& f, int begin, int end) {
  if (!f.symmetric_in(begin, end)) throw NotSymmetric("input polynomial is not symmetric: " + to_string(f));
}

}  // namespace

MPoly apply_cms_trig_A(const MPoly& f, int N, const Frac& k) {
  require_symmetric(f, 0, N);
  MPoly out(f.layout());
  std::vector<MPoly> e(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    e[static_cast<std::size_t>(i)] = euler(f, i);
    out += euler(e[static_cast<std::size_t>(i)], i);
  }
  MPoly coupling(f.layout());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      MPoly q = (e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(j)]).divide_by_difference(i, j);
      coupling += q.times_variable(i) + q.times_variable(j);
    }
  return out - coupling.scaled(k);
}

MPoly apply_gauged_rational_A(const MPoly& f, int N, const Frac& k) {
  require_symmetric(f, 0, N);
  MPoly out(f.layout());
  std::vector<MPoly> d(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    d[static_cast<std::size_t>(i)] = f.derivative(i);
    out += d[static_cast<std::size_t>(i)].derivative(i);
  }
  MPoly coupling(f.layout());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      coupling += (d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(j)]).divide_by_difference(i, j);
  return out - coupling.scaled(Frac(2L) * k);
}

MPoly apply_gauged_rational_B(const MPoly& f, int N, const Frac& k, const Frac& l) {
  require_symmetric(f, 0, N);
  MPoly out(f.layout());
  Frac first = Frac(Rational(1, 2)) - l;
  std::vector<MPoly> e(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    MPoly d = f.derivative(i);
    e[static_cast<std::size_t>(i)] = d.times_variable(i);
    out += d.derivative(i).times_variable(i) + d.scaled(first);
  }
  MPoly coupling(f.layout());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      coupling += (e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(j)]).divide_by_difference(i, j);
  return out - coupling.scaled(Frac(2L) * k);
}

MPoly apply_gauged_bc_trig(const MPoly& f, int N, const Frac& k, const Frac& p, const Frac& q) {
  require_symmetric(f, 0, N);
  Frac lin = Frac(1L) - p - Frac(2L) * q;
  Frac cst = Frac(1L) - Frac(2L) * p - Frac(2L) * q;
  MPoly out(f.layout());
  std::vector<MPoly> flow(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    MPoly d = f.derivative(i);
    flow[static_cast<std::size_t>(i)] = bc_flow(f, i);
    out += bc_flow(d, i) + d.times_variable(i).scaled(lin) + d.scaled(cst);
  }
  MPoly coupling(f.layout());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      coupling += (flow[static_cast<std::size_t>(i)] - flow[static_cast<std::size_t>(j)]).divide_by_difference(i, j);
  return out - coupling.scaled(Frac(2L) * k);
}

MPoly apply_gauged_deformed_bc(const MPoly& f, const DeformedContext& ctx) {
  if (!is_in_deformed_algebra(f, ctx))
    throw NotInDeformedAlgebra("input is not in the deformed algebra: " + to_string(f));
  const int m = ctx.m, n = ctx.n;
  const Frac& k = ctx.k;
  const Frac two(2L);
  Frac u_lin = Frac(1L) - ctx.p - two * ctx.q;
  Frac u_cst = Frac(1L) - two * ctx.p - two * ctx.q;
  Frac v_lin = two * k - ctx.p - two * ctx.q - Frac(1L);
  Frac v_cst = two * k - two * ctx.p - two * ctx.q - Frac(1L);

  MPoly out(ctx.layout());
  std::vector<MPoly> flow(static_cast<std::size_t>(m + n));
  for (int i = 0; i < m + n; ++i) {
    bool is_u = i < m;
    MPoly d = f.derivative(i);
    flow[static_cast<std::size_t>(i)] = bc_flow(f, i);
    MPoly second = bc_flow(d, i);
    if (!is_u) second = second.scaled(k);
    out += second + d.times_variable(i).scaled(is_u ? u_lin : v_lin) + d.scaled(is_u ? u_cst : v_cst);
  }
  auto F = [&](int i) -> const MPoly& { return flow[static_cast<std::size_t>(i)]; };
  MPoly uu(ctx.layout()), vv(ctx.layout()), uv(ctx.layout());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) uu += (F(i) - F(j)).divide_by_difference(i, j);
  for (int i = m; i < m + n; ++i)
    for (int j = i + 1; j < m + n; ++j) vv += (F(i) - F(j)).divide_by_difference(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = m; j < m + n; ++j) uv += (F(i) - F(j).scaled(k)).divide_by_difference(i, j);
  return out - uu.scaled(two * k) - vv.scaled(two) - uv.scaled(two);
}

MPoly phi_mn(const SymFun& f, const DeformedContext& ctx) {
  VarLayout layout = ctx.layout();
  Bindings values;
  if (ctx.k != Frac::param(Param::k)) values.emplace(Param::k, ctx.k);
  if (ctx.p != Frac::param(Param::p)) values.emplace(Param::p, ctx.p);
  if (ctx.q != Frac::param(Param::q)) values.emplace(Param::q, ctx.q);
  bool needs_p0 = false;
  for (const auto& [lambda, c] : f.terms())
    if (c.depends_on(slot(Param::p0))) needs_p0 = true;
  if (needs_p0) values.emplace(Param::p0, ctx.p0_value());

  Frac inv_k;
  if (ctx.n > 0) {
    if (ctx.k.is_zero()) throw PoleError("deformed power sums need k^{-1}; k = 0");
    inv_k = ctx.k.inverse();
  }
  std::map<int, MPoly> power_sums;
  auto power_sum = [&](int a) -> const MPoly& {
    auto it = power_sums.find(a);
    if (it != power_sums.end()) return it->second;
    MPoly s(layout);
    for (int i = 0; i < ctx.m + ctx.n; ++i)
      s.add_term(Monomial::variable(static_cast<std::size_t>(i), static_cast<unsigned>(a)),
                 i < ctx.m ? Frac(1L) : inv_k);
    return power_sums.emplace(a, std::move(s)).first->second;
  };
  MPoly out(layout);
  for (const auto& [lambda, c] : f.terms()) {
    Frac coeff = values.empty() ? c : substitute(c, values);
    if (coeff.is_zero()) continue;
    MPoly term = MPoly::constant(layout, coeff);
    for (int a : lambda.parts()) term = term * power_sum(a);
    out += term;
  }
  return out;
}

bool is_in_deformed_algebra(const MPoly& f, const DeformedContext& ctx) {
  const int m = ctx.m, n = ctx.n;
  if (!f.symmetric_in(0, m) || !f.symmetric_in(m, m + n)) return false;
  for (int i = 0; i < m; ++i) {
    MPoly eu = euler(f, i);
    for (int a = m; a < m + n; ++a) {
      MPoly condition = eu - euler(f, a).scaled(ctx.k);
      if (!condition.restrict_equal(i, a).is_zero()) return false;
    }
  }
  return true;
}

Restriction Restriction::finite(int N) {
  if (N < 1 || N > static_cast<int>(kMaxVars)) throw std::invalid_argument("phi_N needs 1 <= N <= 16");
  Restriction r;
  r.N_ = N;
  return r;
}

Restriction Restriction::deformed(const DeformedContext& ctx) {
  Restriction r;
  r.deformed_ = true;
  r.ctx_ = ctx;
  return r;
}

MPoly Restriction::operator()(const SymFun& f) const { return deformed_ ? phi_mn(f, ctx_) : phi_N(f, N_); }

std::vector<SymFun> kernel_basis(const Restriction& hom, int d) {
  std::vector<SymFun> basis;
  for (int e = 1; e <= d; ++e) {
    auto parts = partitions_of(e);
    std::map<Monomial, std::size_t, GrlexGreater> rows;
    std::vector<MPoly> images;
    images.reserve(parts.size());
    for (const auto& lambda : parts) {
      images.push_back(hom(SymFun::monomial(lambda)));
      for (const auto& [mono, c] : images.back().terms()) rows.try_emplace(mono, rows.size());
    }
    Matrix<Frac> a(rows.size(), std::vector<Frac>(parts.size()));
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (const auto& [mono, c] : images[j].terms()) a[rows.at(mono)][j] = c;
    for (const auto& v : nullspace(a, parts.size())) {
      SymFun f;
      for (std::size_t j = 0; j < parts.size(); ++j) f.add_term(parts[j], v[j]);
      basis.push_back(std::move(f));
    }
  }
  return basis;
}

}  // namespace cmsym
