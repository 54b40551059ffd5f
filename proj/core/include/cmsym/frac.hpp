#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cmsym/errors.hpp"
#include "cmsym/poly.hpp"

namespace cmsym {

/// The formal parameters. Their slot index is also the canonical term order.
enum class Param : std::size_t { k = 0, p = 1, q = 2, h = 3, p0 = 4, l = 5 };

inline constexpr std::size_t kNumParams = 6;

inline std::size_t slot(Param p) { return static_cast<std::size_t>(p); }

/// Polynomial in the formal parameters.
using ParamPoly = Poly;

/// Quotient of two polynomials. Arithmetic keeps results reduced (gcd-free,
/// integer-normalised with a positive leading denominator coefficient), but
/// equality is decided by cross-multiplication so that hand-built unreduced
/// values compare correctly.
class Frac {
 public:
  Frac() : den_(1L) {}
  Frac(long value) : num_(value), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Frac(const Rational& value) : num_(value), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Frac(const Poly& num) : num_(num), den_(1L) {}  // NOLINT(google-explicit-constructor)
  /// Reduces; throws PoleError when `den` is zero.
  Frac(const Poly& num, const Poly& den);

  /// Keeps the pair as given (no gcd); equality still works.
  static Frac unreduced(Poly num, Poly den);

  static Frac param(Param p) { return Frac(Poly::variable(slot(p))); }
  static Frac variable(std::size_t s) { return Frac(Poly::variable(s)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const;
  Rational constant_value() const;
  bool depends_on(std::size_t s) const { return num_.depends_on(s) || den_.depends_on(s); }
  std::uint32_t variable_mask() const { return num_.variable_mask() | den_.variable_mask(); }

  Frac operator-() const;
  Frac& operator+=(const Frac& o);
  Frac& operator-=(const Frac& o);
  Frac& operator*=(const Frac& o);
  Frac& operator/=(const Frac& o);
  friend Frac operator+(Frac a, const Frac& b) { return a += b; }
  friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
  friend Frac operator*(Frac a, const Frac& b) { return a *= b; }
  friend Frac operator/(Frac a, const Frac& b) { return a /= b; }

  Frac inverse() const;
  Frac pow(int e) const;

  /// Derivative in one variable slot (quotient rule).
  Frac derivative(std::size_t s) const;

  /// Full gcd reduction and integer normalisation.
  Frac reduced() const;

  friend bool operator==(const Frac& a, const Frac& b);
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

 private:
  void canonical_scale();

  Poly num_;
  Poly den_;
};

using CoeffFrac = Frac;

bool frac_equal(const Frac& a, const Frac& b);

/// Parameter bindings; values may be rationals or parameter expressions.
using Bindings = std::map<Param, Frac>;

/// Simultaneous substitution of the bound parameters.
/// Throws PoleError when the denominator becomes identically zero.
Frac substitute(const Frac& f, const Bindings& bindings);
Frac substitute_slots(const Frac& f, const std::map<std::size_t, Frac>& bindings);

/// Cancels the largest common power of (param - value) in numerator and
/// denominator, then substitutes. Throws PoleError if a pole survives.
Frac limit_along_parameter(const Frac& f, Param param, const Rational& value);

/// g with g*g == f, when f is the square of a fraction.
std::optional<Frac> sqrt_exact(const Frac& f);

std::string param_name(Param p);
std::optional<Param> param_from_name(const std::string& name);

/// Canonical text: polynomials in grlex order, "(num)/(den)" for proper
/// fractions, e.g. "(2*k)/(k - 1)".
std::string to_string(const Frac& f);

/// Parses the text produced by to_string (and ordinary infix arithmetic with
/// + - * / ^ and parentheses) over the parameter names.
Frac parse_frac(std::string_view text);

}  // namespace cmsym
