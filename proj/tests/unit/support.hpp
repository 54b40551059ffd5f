#pragma once

#include <random>

#include "cmsym/frac.hpp"
#include "cmsym/mpoly.hpp"
#include "cmsym/symfun.hpp"

namespace cmsym::testing {

inline Frac F(const char* text) { return parse_frac(text); }
inline Frac k() { return Frac::param(Param::k); }
inline Frac p0() { return Frac::param(Param::p0); }

// Random polynomial in the formal parameters with at most `terms` terms.
inline Poly random_poly(std::mt19937& rng, int terms = 5, int max_exp = 2) {
  std::uniform_int_distribution<int> coeff(-9, 9), exp(0, max_exp), slot(0, 2), count(0, terms);
  std::vector<Poly::Term> out;
  for (int t = count(rng); t > 0; --t) {
    Monomial m;
    for (int i = 0; i < 2; ++i) {
      std::size_t s = static_cast<std::size_t>(slot(rng));
      m.set(s, m[s] + static_cast<unsigned>(exp(rng)));
    }
    out.push_back({m, Rational(coeff(rng))});
  }
  return Poly::from_terms(std::move(out));
}

inline Poly random_nonzero_poly(std::mt19937& rng) {
  for (;;) {
    Poly p = random_poly(rng, 3);
    if (!p.is_zero()) return p;
  }
}

// Random element of Lambda with terms of degree <= d.
inline SymFun random_symfun(std::mt19937& rng, int d, int terms = 4) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, d);
  SymFun f;
  for (int t = 0; t < terms; ++t) {
    auto parts = partitions_of(deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    f.add_term(parts[pick(rng)], Frac(static_cast<long>(coeff(rng))) + Frac(static_cast<long>(coeff(rng))) * Frac::param(Param::k));
  }
  return f;
}

}  // namespace cmsym::testing
