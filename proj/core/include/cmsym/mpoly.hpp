#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "cmsym/frac.hpp"

namespace cmsym {

/// Names and grouping of the coordinates of a finite model: one group of
/// `first` variables (z1.., x1.. or u1..) followed by `second` v-variables.
struct VarLayout {
  int first = 0;
  int second = 0;
  char first_letter = 'z';

  static VarLayout z(int n) { return {n, 0, 'z'}; }
  static VarLayout x(int n) { return {n, 0, 'x'}; }
  static VarLayout uv(int m, int n) { return {m, n, 'u'}; }

  int size() const { return first + second; }
  std::string name(int i) const;
  friend bool operator==(const VarLayout&, const VarLayout&) = default;
};

/// Exact sparse polynomial in finitely many coordinates with fraction
/// coefficients. Exponents live in the Monomial slots 0..size-1.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Frac, GrlexGreater>;

  MPoly() = default;
  explicit MPoly(VarLayout layout) : layout_(layout) {}
  static MPoly constant(VarLayout layout, const Frac& c);
  static MPoly variable(VarLayout layout, int i);

  const VarLayout& layout() const { return layout_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  Frac coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Frac& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Frac& c) const;
  MPoly pow(unsigned e) const;

  MPoly derivative(int i) const;
  MPoly times_variable(int i, unsigned power = 1) const;

  /// Exact quotient by (x_i - x_j), synthetic division in the lower-indexed
  /// variable. Throws DivisionFailure when a remainder survives.
  MPoly divide_by_difference(int i, int j) const;
  /// Sets x_i := x_j.
  MPoly restrict_equal(int i, int j) const;
  MPoly swapped(int i, int j) const;
  /// Invariance under permutations of the variables [begin, end).
  bool symmetric_in(int begin, int end) const;

  MPoly map_coefficients(const std::function<Frac(const Frac&)>& fn) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  VarLayout layout_;
  TermMap terms_;
};

/// Terms joined by " + " in grlex order, "coeff * u1^2*v1".
std::string to_string(const MPoly& f);
/// Parses to_string output (or any polynomial expression in the layout's
/// coordinates with parameter-fraction coefficients).
MPoly parse_mpoly(std::string_view text, VarLayout layout);

}  // namespace cmsym
