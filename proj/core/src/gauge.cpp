#include "cmsym/gauge.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace cmsym {

namespace {

constexpr std::size_t kFirstSlot = kNumParams;

// Rational functions whose denominators are products of a fixed list of
// irreducible factors. Addition uses the least common multiple of the factored
// denominators, so no polynomial gcd is ever taken; cancellation at the end is
// trial division by the listed factors.
struct Factors {
  std::vector<Poly> list;

  // Index of f up to sign; the flag is set when f is minus the stored factor.
  std::pair<int, bool> find_or_add(const Poly& f) {
    Poly neg = -f;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] == f) return {static_cast<int>(i), false};
      if (list[i] == neg) return {static_cast<int>(i), true};
    }
    list.push_back(f);
    return {static_cast<int>(list.size() - 1), false};
  }
};

using Exponents = std::map<int, unsigned>;

struct RF {
  Factors* table = nullptr;
  Poly num;
  Exponents den;

  bool is_zero() const { return num.is_zero(); }
};

Factors* pick(const RF& a, const RF& b) { return a.table ? a.table : b.table; }

Poly product(const Factors& t, const Exponents& e) {
  Poly out(1L);
  for (const auto& [i, n] : e)
    if (n) out *= t.list[static_cast<std::size_t>(i)].pow(n);
  return out;
}

RF operator+(const RF& a, const RF& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RF out{pick(a, b), Poly(), a.den};
  for (const auto& [i, n] : b.den) out.den[i] = std::max(out.den[i], n);
  Exponents ea, eb;
  for (const auto& [i, n] : out.den) {
    auto ia = a.den.find(i), ib = b.den.find(i);
    unsigned na = ia == a.den.end() ? 0 : ia->second, nb = ib == b.den.end() ? 0 : ib->second;
    if (n > na) ea[i] = n - na;
    if (n > nb) eb[i] = n - nb;
  }
  out.num = a.num * product(*out.table, ea) + b.num * product(*out.table, eb);
  if (out.num.is_zero()) out.den.clear();
  return out;
}

RF operator-(const RF& a) { return RF{a.table, -a.num, a.den}; }
RF operator-(const RF& a, const RF& b) { return a + -b; }

RF operator*(const RF& a, const RF& b) {
  if (a.is_zero() || b.is_zero()) return RF{pick(a, b), Poly(), {}};
  RF out{pick(a, b), a.num * b.num, a.den};
  for (const auto& [i, n] : b.den) out.den[i] += n;
  return out;
}

RF& operator+=(RF& a, const RF& b) { return a = a + b; }
RF& operator-=(RF& a, const RF& b) { return a = a - b; }

RF pow(const RF& a, unsigned e) {
  RF out{a.table, Poly(1L), {}};
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

// num / factor^e with factor irreducible.
RF over(Factors& t, Poly num, const Poly& factor, unsigned e = 1) {
  auto [i, flipped] = t.find_or_add(factor);
  if (flipped && e % 2) num = -num;
  return RF{&t, std::move(num), {{i, e}}};
}

// Parameter-only coefficient; its denominator is registered as one factor.
RF lift(Factors& t, const Frac& c) {
  if (c.den().is_one()) return RF{&t, c.num(), {}};
  if (c.den().is_constant()) return RF{&t, c.num().scaled(1 / c.den().constant_value()), {}};
  return over(t, c.num(), c.den());
}

RF derivative(const RF& a, std::size_t slot) {
  if (a.is_zero()) return a;
  const Factors& t = *a.table;
  std::vector<int> involved;
  for (const auto& [i, n] : a.den)
    if (n && t.list[static_cast<std::size_t>(i)].depends_on(slot)) involved.push_back(i);
  Poly all(1L);
  for (int i : involved) all *= t.list[static_cast<std::size_t>(i)];
  Poly num = a.num.derivative(slot) * all;
  for (int i : involved) {
    Poly rest(1L);
    for (int j : involved)
      if (j != i) rest *= t.list[static_cast<std::size_t>(j)];
    const Poly& f = t.list[static_cast<std::size_t>(i)];
    num -= (a.num * f.derivative(slot) * rest).scaled(Rational(static_cast<long>(a.den.at(i))));
  }
  RF out{a.table, std::move(num), a.den};
  for (int i : involved) out.den[i] += 1;
  if (out.num.is_zero()) out.den.clear();
  return out;
}

RF cancel(RF a) {
  for (auto& [i, n] : a.den) {
    const Poly& f = a.table->list[static_cast<std::size_t>(i)];
    while (n) {
      auto q = a.num.divide_exact(f);
      if (!q) break;
      a.num = std::move(*q);
      --n;
    }
  }
  return a;
}

struct Model {
  std::unique_ptr<Factors> table = std::make_unique<Factors>();
  bool hyperbolic = false;
  std::vector<std::size_t> slots;
  std::vector<RF> mass;
  std::vector<RF> G;
  RF V;
  // Original finite coordinate as a function of the X (or x) slots.
  std::vector<RF> coordinate;
  Rational normalisation{1};

  RF zero() const { return RF{table.get(), Poly(), {}}; }
  RF constant(const Frac& c) const { return lift(*table, c); }
  RF var(int i) const { return RF{table.get(), Poly::variable(kFirstSlot + static_cast<std::size_t>(i)), {}}; }
  Poly x(int i) const { return Poly::variable(kFirstSlot + static_cast<std::size_t>(i)); }

  RF d(std::size_t i, const RF& f) const {
    RF r = derivative(f, slots[i]);
    if (hyperbolic) r.num = r.num.scaled(Rational(2)) * Poly::variable(slots[i]);
    return r;
  }

  // Hyperbolic functions of x in terms of X = e^{2x}.
  RF coth_diff(int i, int j) const { return over(*table, x(i) + x(j), x(i) - x(j)); }
  RF coth_sum(int i, int j) const { return over(*table, x(i) * x(j) + Poly(1L), x(i) * x(j) - Poly(1L)); }
  RF coth1(int i) const { return over(*table, x(i) + Poly(1L), x(i) - Poly(1L)); }
  RF coth2(int i) const {
    return over(*table, x(i) * x(i) + Poly(1L), x(i) - Poly(1L)) * over(*table, Poly(1L), x(i) + Poly(1L));
  }
  RF inv_sinh2(const RF& coth) const { return coth * coth - constant(Frac(1L)); }
  RF u_of(int i) const {
    Poly t = x(i) - Poly(1L);
    return over(*table, (t * t).scaled(Rational(1, 2)), x(i));
  }
};

Frac value_or_symbol(const Bindings& b, Param p) {
  auto it = b.find(p);
  return it == b.end() ? Frac::param(p) : it->second;
}

void check_size(int count) {
  if (count < 1 || count > static_cast<int>(kMaxVars - kFirstSlot))
    throw std::invalid_argument("gauge checks support 1..10 coordinates");
}

Model build(Family family, int N, const Bindings& params) {
  check_size(N);
  Model m;
  Factors& t = *m.table;
  const Frac k = value_or_symbol(params, Param::k), one(1L), two(2L);
  const RF K = m.constant(k), pair_strength = m.constant(two * k * (k + one));
  for (int i = 0; i < N; ++i) {
    m.slots.push_back(kFirstSlot + static_cast<std::size_t>(i));
    m.mass.push_back(m.constant(one));
  }
  m.G.assign(static_cast<std::size_t>(N), m.zero());
  m.V = m.zero();
  switch (family) {
    case Family::RatA:
      for (int i = 0; i < N; ++i) {
        m.coordinate.push_back(m.var(i));
        for (int j = 0; j < N; ++j)
          if (j != i) m.G[i] -= K * over(t, Poly(1L), m.x(i) - m.x(j));
      }
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) m.V += pair_strength * over(t, Poly(1L), m.x(i) - m.x(j), 2);
      break;
    case Family::RatB: {
      Frac l = value_or_symbol(params, Param::l);
      m.normalisation = 4;
      for (int i = 0; i < N; ++i) {
        m.coordinate.push_back(m.var(i) * m.var(i));
        m.G[i] -= m.constant(l) * over(t, Poly(1L), m.x(i));
        for (int j = 0; j < N; ++j)
          if (j != i) m.G[i] -= K * (over(t, Poly(1L), m.x(i) - m.x(j)) + over(t, Poly(1L), m.x(i) + m.x(j)));
        m.V += m.constant(l * (l + one)) * over(t, Poly(1L), m.x(i), 2);
      }
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
          m.V += pair_strength * (over(t, Poly(1L), m.x(i) - m.x(j), 2) + over(t, Poly(1L), m.x(i) + m.x(j), 2));
      break;
    }
    case Family::TrigA:
      m.hyperbolic = true;
      m.normalisation = 4;
      for (int i = 0; i < N; ++i) {
        m.coordinate.push_back(m.var(i));
        for (int j = 0; j < N; ++j)
          if (j != i) m.G[i] -= K * m.coth_diff(i, j);
      }
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) m.V += pair_strength * m.inv_sinh2(m.coth_diff(i, j));
      break;
    case Family::TrigBC: {
      Frac p = value_or_symbol(params, Param::p), q = value_or_symbol(params, Param::q);
      m.hyperbolic = true;
      m.normalisation = 4;
      for (int i = 0; i < N; ++i) {
        m.coordinate.push_back(m.u_of(i));
        m.G[i] -= m.constant(p) * m.coth1(i) + m.constant(two * q) * m.coth2(i);
        for (int j = 0; j < N; ++j)
          if (j != i) m.G[i] -= K * (m.coth_diff(i, j) + m.coth_sum(i, j));
        m.V += m.constant(p * (p + two * q + one)) * m.inv_sinh2(m.coth1(i)) +
               m.constant(Frac(4L) * q * (q + one)) * m.inv_sinh2(m.coth2(i));
      }
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
          m.V += pair_strength * (m.inv_sinh2(m.coth_diff(i, j)) + m.inv_sinh2(m.coth_sum(i, j)));
      break;
    }
  }
  return m;
}

Model build(const DeformedContext& ctx) {
  int total = ctx.m + ctx.n;
  check_size(total);
  Model m;
  m.hyperbolic = true;
  m.normalisation = 4;
  const Frac one(1L), two(2L), four(4L);
  const Frac& k = ctx.k;
  Frac r = ctx.p / k;
  Frac s = ((two * ctx.q + one) / k - one) / two;
  auto is_x = [&](int i) { return i < ctx.m; };
  for (int i = 0; i < total; ++i) {
    m.slots.push_back(kFirstSlot + static_cast<std::size_t>(i));
    m.mass.push_back(m.constant(is_x(i) ? one : k));
    m.coordinate.push_back(m.u_of(i));
  }
  m.G.assign(static_cast<std::size_t>(total), m.zero());
  m.V = m.zero();
  for (int i = 0; i < total; ++i) {
    RF& g = m.G[static_cast<std::size_t>(i)];
    if (is_x(i))
      g -= m.constant(ctx.p) * m.coth1(i) + m.constant(two * ctx.q) * m.coth2(i);
    else
      g -= m.constant(r) * m.coth1(i) + m.constant(two * s) * m.coth2(i);
    for (int j = 0; j < total; ++j) {
      if (j == i) continue;
      RF both = m.coth_diff(i, j) + m.coth_sum(i, j);
      Frac c = is_x(i) && is_x(j) ? k : !is_x(i) && !is_x(j) ? k.inverse() : one;
      g -= m.constant(c) * both;
    }
  }
  for (int i = 0; i < total; ++i) {
    for (int j = i + 1; j < total; ++j) {
      RF both = m.inv_sinh2(m.coth_diff(i, j)) + m.inv_sinh2(m.coth_sum(i, j));
      Frac strength = is_x(i) && is_x(j)   ? two * k * (k + one)
                      : !is_x(i) && !is_x(j) ? two * (k.inverse() + one)
                                             : two * (k + one);
      m.V += m.constant(strength) * both;
    }
    if (is_x(i))
      m.V += m.constant(ctx.p * (ctx.p + two * ctx.q + one)) * m.inv_sinh2(m.coth1(i)) +
             m.constant(four * ctx.q * (ctx.q + one)) * m.inv_sinh2(m.coth2(i));
    else
      m.V += m.constant(k * r * (r + two * s + one)) * m.inv_sinh2(m.coth1(i)) +
             m.constant(four * k * s * (s + one)) * m.inv_sinh2(m.coth2(i));
  }
  return m;
}

GaugeCheck remainder(const Model& m) {
  RF R = -m.V;
  for (std::size_t i = 0; i < m.slots.size(); ++i) R += m.mass[i] * (m.d(i, m.G[i]) + m.G[i] * m.G[i]);
  R = cancel(std::move(R));
  Poly den = product(*m.table, R.den);
  GaugeCheck out;
  out.constant = true;
  for (std::size_t s : m.slots)
    if (R.num.depends_on(s) || den.depends_on(s)) out.constant = false;
  out.remainder = out.constant ? Frac(R.num, den) : Frac::unreduced(R.num, den);
  return out;
}

RF compose(const Model& m, const MPoly& f) {
  RF out = m.zero();
  for (const auto& [mono, c] : f.terms()) {
    RF term = m.constant(c);
    for (std::size_t i = 0; i < m.coordinate.size(); ++i)
      if (mono[i]) term = term * pow(m.coordinate[i], mono[i]);
    out += term;
  }
  return out;
}

bool matches(const Model& m, const MPoly& f, const MPoly& image) {
  RF F = compose(m, f);
  RF gauged = m.zero();
  for (std::size_t i = 0; i < m.slots.size(); ++i) {
    RF dF = m.d(i, F);
    gauged += m.mass[i] * (m.d(i, dF) + m.constant(Frac(2L)) * m.G[i] * dF);
  }
  RF rhs = compose(m, image);
  rhs.num = rhs.num.scaled(m.normalisation);
  return (gauged - rhs).is_zero();
}

}  // namespace

GaugeCheck gauge_remainder(Family family, int N, const Bindings& params) { return remainder(build(family, N, params)); }

GaugeCheck gauge_remainder(const DeformedContext& ctx) { return remainder(build(ctx)); }

bool gauge_matches_operator(Family family, int N, const MPoly& f, const Bindings& params) {
  Model m = build(family, N, params);
  Frac k = value_or_symbol(params, Param::k);
  MPoly image;
  switch (family) {
    case Family::TrigA: image = apply_cms_trig_A(f, N, k); break;
    case Family::RatA: image = apply_gauged_rational_A(f, N, k); break;
    case Family::RatB: image = apply_gauged_rational_B(f, N, k, value_or_symbol(params, Param::l)); break;
    case Family::TrigBC:
      image = apply_gauged_bc_trig(f, N, k, value_or_symbol(params, Param::p), value_or_symbol(params, Param::q));
      break;
  }
  return matches(m, f, image);
}

bool gauge_matches_operator(const DeformedContext& ctx, const MPoly& f) {
  return matches(build(ctx), f, apply_gauged_deformed_bc(f, ctx));
}

}  // namespace cmsym
