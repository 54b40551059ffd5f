// Multivariate gcd over Q by recursion on the variable slots: content in the
// main variable, then the subresultant remainder sequence on primitive parts.

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cmsym/poly.hpp"

namespace cmsym {
namespace {

Poly normalize(const Poly& p) { return p.primitive(); }

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return std::move(*q);
}

// Dense univariate view in one slot; coefficients never involve that slot.
using UPoly = std::vector<Poly>;

int udeg(const UPoly& u) {
  for (std::size_t i = u.size(); i-- > 0;)
    if (!u[i].is_zero()) return static_cast<int>(i);
  return -1;
}

void utrim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UPoly prem(UPoly a, const UPoly& b) {
  int db = udeg(b);
  const Poly& lb = b[db];
  int da = udeg(a);
  int e = da - db + 1;
  while (da >= db && da >= 0) {
    Poly la = a[da];
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    utrim(a);
    da = udeg(a);
    --e;
  }
  if (e > 0) {
    Poly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, std::size_t slot) {
  Poly g;
  for (const auto& c : p.coefficients_in(slot)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : gcd_rec(g, c);
    if (g.is_constant()) return Poly(1L);
  }
  return g;
}

Poly univariate_content(const UPoly& u) {
  Poly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : gcd_rec(g, c);
    if (g.is_constant()) return Poly(1L);
  }
  return g;
}

// Euclid in Q[x] when both inputs are univariate in the same slot.
Poly univariate_gcd(Poly a, Poly b, std::size_t slot) {
  UPoly ua = a.coefficients_in(slot), ub = b.coefficients_in(slot);
  utrim(ua);
  utrim(ub);
  if (udeg(ua) < udeg(ub)) std::swap(ua, ub);
  while (udeg(ub) >= 0) {
    int db = udeg(ub);
    Rational lb = ub[db].constant_value();
    while (udeg(ua) >= db) {
      int da = udeg(ua);
      Rational f = ua[da].constant_value() / lb;
      for (int i = 0; i <= db; ++i) ua[da - db + i] -= ub[i].scaled(f);
      utrim(ua);
    }
    std::swap(ua, ub);
  }
  return normalize(Poly::from_coefficients(slot, ua));
}

Poly subresultant_gcd(const Poly& a, const Poly& b, std::size_t slot) {
  UPoly A = a.coefficients_in(slot), B = b.coefficients_in(slot);
  utrim(A);
  utrim(B);
  if (udeg(A) < udeg(B)) std::swap(A, B);
  Poly g(1L), h(1L);
  while (true) {
    int delta = udeg(A) - udeg(B);
    UPoly R = prem(A, B);
    utrim(R);
    if (R.empty()) break;
    if (udeg(R) == 0) return Poly(1L);
    A = std::move(B);
    Poly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : R) c = exact(c, divisor);
    B = std::move(R);
    g = A[udeg(A)];
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Poly cb = univariate_content(B);
  for (auto& c : B) c = exact(c, cb);
  return normalize(Poly::from_coefficients(slot, B));
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return Poly(1L);

  // Pull out the common monomial factor first.
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial mg = Monomial::gcd(ma, mb);
  if (!ma.is_one() || !mb.is_one()) {
    Poly ra = exact(a, Poly(ma, Rational(1)));
    Poly rb = exact(b, Poly(mb, Rational(1)));
    Poly g = (ra.is_constant() || rb.is_constant()) ? Poly(1L) : gcd_rec(ra, rb);
    return normalize(g.times_monomial(mg));
  }
  if (a.size() == 1 || b.size() == 1) return Poly(1L);

  std::uint32_t va = a.variable_mask(), vb = b.variable_mask();
  std::uint32_t both = va & vb;
  if (both == 0) return Poly(1L);

  // A slot present in only one input cannot divide the gcd.
  std::uint32_t only_a = va & ~vb;
  if (only_a) return gcd_rec(content_in(a, static_cast<std::size_t>(std::countr_zero(only_a))), b);
  std::uint32_t only_b = vb & ~va;
  if (only_b) return gcd_rec(a, content_in(b, static_cast<std::size_t>(std::countr_zero(only_b))));

  if (std::popcount(both) == 1) return univariate_gcd(a, b, static_cast<std::size_t>(std::countr_zero(both)));

  if (a == b) return normalize(a);
  if (auto q = a.divide_exact(b)) return normalize(b);
  if (auto q = b.divide_exact(a)) return normalize(a);

  // Main variable: the shared slot with the smallest combined degree.
  std::size_t slot = 0;
  unsigned best = ~0U;
  for (std::size_t s = 0; s < kMaxVars; ++s) {
    if (!((both >> s) & 1U)) continue;
    unsigned d = a.degree_in(s) + b.degree_in(s);
    if (d < best) {
      best = d;
      slot = s;
    }
  }

  Poly ca = content_in(a, slot), cb = content_in(b, slot);
  Poly c = gcd_rec(ca, cb);
  Poly pa = exact(a, ca), pb = exact(b, cb);
  Poly g = subresultant_gcd(pa, pb, slot);
  return normalize(c * g);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  return gcd_rec(a, b);
}

}  // namespace cmsym
