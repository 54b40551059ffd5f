#include "cmsym/mpoly.hpp"

#include <vector>

#include "cmsym/detail/expr_parser.hpp"

namespace cmsym {

std::string VarLayout::name(int i) const {
  if (i < first) return std::string(1, first_letter) + std::to_string(i + 1);
  return "v" + std::to_string(i - first + 1);
}

MPoly MPoly::constant(VarLayout layout, const Frac& c) {
  MPoly r(layout);
  r.add_term(Monomial{}, c);
  return r;
}

MPoly MPoly::variable(VarLayout layout, int i) {
  MPoly r(layout);
  r.add_term(Monomial::variable(static_cast<std::size_t>(i)), Frac(1L));
  return r;
}

Frac MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Frac() : it->second;
}

void MPoly::add_term(const Monomial& m, const Frac& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.layout_.size() > layout_.size()) layout_ = o.layout_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.layout_.size() > layout_.size()) layout_ = o.layout_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(b.layout_.size() > a.layout_.size() ? b.layout_ : a.layout_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::scaled(const Frac& c) const {
  MPoly r(layout_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, x * c);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(layout_, Frac(1L));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

MPoly MPoly::derivative(int i) const {
  MPoly r(layout_);
  auto s = static_cast<std::size_t>(i);
  for (const auto& [m, c] : terms_) {
    unsigned e = m[s];
    if (!e) continue;
    Monomial d = m;
    d.set(s, e - 1);
    r.add_term(d, c * Frac(static_cast<long>(e)));
  }
  return r;
}

MPoly MPoly::times_variable(int i, unsigned power) const {
  MPoly r(layout_);
  Monomial x = Monomial::variable(static_cast<std::size_t>(i), power);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m * x, c);
  return r;
}

MPoly MPoly::divide_by_difference(int i, int j) const {
  if (i == j) throw DivisionFailure("division by x_i - x_i");
  // Division by (x_i - x_j) for i > j is the negative of division by (x_j - x_i).
  if (i > j) return -divide_by_difference(j, i);
  auto si = static_cast<std::size_t>(i);
  // Group by the power of x_i.
  std::vector<MPoly> coeffs;
  for (const auto& [m, c] : terms_) {
    unsigned e = m[si];
    if (coeffs.size() <= e) coeffs.resize(e + 1, MPoly(layout_));
    Monomial rest = m;
    rest.set(si, 0);
    coeffs[e].terms_.emplace(rest, c);
  }
  MPoly quotient(layout_);
  if (coeffs.empty()) return quotient;
  // Synthetic division by (x_i - x_j): q_{e-1} = c_e + x_j q_e.
  MPoly carry(layout_);
  for (std::size_t e = coeffs.size(); e-- > 1;) {
    carry = coeffs[e] + carry.times_variable(j);
    for (const auto& [m, c] : carry.terms_) quotient.terms_.emplace(m * Monomial::variable(si, static_cast<unsigned>(e - 1)), c);
  }
  MPoly remainder = coeffs[0] + carry.times_variable(j);
  if (!remainder.is_zero())
    throw DivisionFailure("polynomial not divisible by " + layout_.name(i) + " - " + layout_.name(j));
  return quotient;
}

MPoly MPoly::restrict_equal(int i, int j) const {
  MPoly r(layout_);
  auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.set(sj, m[sj] + m[si]);
    n.set(si, 0);
    r.add_term(n, c);
  }
  return r;
}

MPoly MPoly::swapped(int i, int j) const {
  MPoly r(layout_);
  auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.set(si, m[sj]);
    n.set(sj, m[si]);
    r.terms_.emplace(n, c);
  }
  return r;
}

bool MPoly::symmetric_in(int begin, int end) const {
  for (int i = begin; i + 1 < end; ++i)
    if (swapped(i, i + 1) != *this) return false;
  return true;
}

MPoly MPoly::map_coefficients(const std::function<Frac(const Frac&)>& fn) const {
  MPoly r(layout_);
  for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (ia->second != ib->second) return false;
  }
  return true;
}

namespace {

bool needs_parens(const std::string& s) {
  for (char c : s)
    if (c == ' ' || c == '/' || c == '*' || c == '-' || c == '+' || c == '^') return true;
  return false;
}

}  // namespace

std::string to_string(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < f.layout().size(); ++i) {
      unsigned e = m[static_cast<std::size_t>(i)];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += f.layout().name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string cs = to_string(c);
    if (mono.empty()) {
      out += needs_parens(cs) && f.size() > 1 ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += (needs_parens(cs) ? "(" + cs + ")" : cs) + " * " + mono;
    }
  }
  return out;
}

namespace {

// Closed arithmetic wrapper for the expression parser; literal constants
// start with an empty layout and adopt the layout of the other operand.
struct Parsed {
  MPoly m;
  Parsed(const Rational& r) : m(MPoly::constant(VarLayout{}, Frac(r))) {}  // NOLINT
  Parsed(MPoly x) : m(std::move(x)) {}  // NOLINT
  friend Parsed operator+(const Parsed& a, const Parsed& b) { return Parsed(a.m + b.m); }
  friend Parsed operator-(const Parsed& a, const Parsed& b) { return Parsed(a.m - b.m); }
  friend Parsed operator*(const Parsed& a, const Parsed& b) { return Parsed(a.m * b.m); }
  Parsed operator-() const { return Parsed(-m); }
};

}  // namespace

MPoly parse_mpoly(std::string_view text, VarLayout layout) {
  auto atom = [&](const std::string& name) -> Parsed {
    for (int i = 0; i < layout.size(); ++i)
      if (layout.name(i) == name) return Parsed(MPoly::variable(layout, i));
    auto p = param_from_name(name);
    if (!p) throw ParseError("unknown symbol '" + name + "'");
    return Parsed(MPoly::constant(layout, Frac::param(*p)));
  };
  auto div = [](const Parsed& a, const Parsed& b) -> Parsed {
    if (b.m.size() != 1 || !b.m.terms().begin()->first.is_one())
      throw ParseError("division by a non-constant polynomial");
    return Parsed(a.m.scaled(b.m.terms().begin()->second.inverse()));
  };
  MPoly parsed = detail::parse_expression<Parsed>(text, atom, div).m;
  MPoly out(layout);
  for (const auto& [mono, c] : parsed.terms()) {
    for (std::size_t s = static_cast<std::size_t>(layout.size()); s < kMaxVars; ++s)
      if (mono[s]) throw ParseError("exponent outside the variable layout");
    out.add_term(mono, c);
  }
  return out;
}

}  // namespace cmsym
