#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cmsym {

using Rational = mpq_class;
using Integer = mpz_class;

/// Number of variable slots shared by every sparse polynomial in the library.
/// Slots 0..5 hold the formal parameters; the remainder are auxiliary
/// variables (coordinates in finite models, scratch variables in proofs).
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector over the fixed variable slots.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial variable(std::size_t slot, unsigned power = 1);

  unsigned operator[](std::size_t slot) const { return exps_[slot]; }
  void set(std::size_t slot, unsigned power);

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold for the divisor.
  Monomial operator/(const Monomial& divisor) const;

  /// Slot-wise minimum.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  const std::array<std::uint8_t, kMaxVars>& raw() const { return exps_; }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
};

/// Graded lexicographic order: total degree first, then lexicographic by slot.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse polynomial over Q. Terms are kept sorted with the grlex-leading
/// term first and never carry a zero coefficient.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);  // NOLINT(google-explicit-constructor)
  Poly(const Monomial& mono, const Rational& coeff);

  static Poly variable(std::size_t slot);
  /// Builds from unsorted, possibly repeated terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Valid only when is_constant().
  Rational constant_value() const;

  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t slot) const;
  /// Bitmask of slots with a nonzero exponent somewhere.
  std::uint32_t variable_mask() const;
  bool depends_on(std::size_t slot) const { return (variable_mask() >> slot) & 1U; }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m) const;
  Poly pow(unsigned e) const;

  /// Returns the quotient when `divisor` divides this polynomial exactly.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  Poly derivative(std::size_t slot) const;

  /// Coefficients as a polynomial in one slot; index = power of that slot.
  std::vector<Poly> coefficients_in(std::size_t slot) const;
  static Poly from_coefficients(std::size_t slot, const std::vector<Poly>& coeffs);

  /// Replaces `slot` by `value` (polynomial substitution).
  Poly substitute(std::size_t slot, const Poly& value) const;

  /// Positive rational c with this/c having coprime integer coefficients.
  Rational content() const;
  /// this / content(), sign fixed so the leading coefficient is positive.
  Poly primitive() const;

  Monomial monomial_content() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor in Q[vars], normalised primitive with positive
/// leading coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// r with r*r == a and a positive leading coefficient, when one exists.
std::optional<Poly> sqrt_exact(const Poly& a);

/// Variable slot names: k, p, q, h, p0, l, then t1..t10 for auxiliary slots.
const std::string& slot_name(std::size_t slot);
std::optional<std::size_t> slot_from_name(const std::string& name);

std::string to_string(const Rational& r);
std::string to_string(const Poly& p);

}  // namespace cmsym
