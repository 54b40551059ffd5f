#include "cmsym/frac.hpp"

#include <cctype>
#include <vector>

#include "cmsym/detail/expr_parser.hpp"

namespace cmsym {
namespace {

Poly exact_div(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("Frac: expected exact division");
  return std::move(*q);
}

}  // namespace

Frac::Frac(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw PoleError("zero denominator");
  if (!den_.is_constant() && !num_.is_zero()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  canonical_scale();
}

Frac Frac::unreduced(Poly num, Poly den) {
  if (den.is_zero()) throw PoleError("zero denominator");
  Frac f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

void Frac::canonical_scale() {
  if (num_.is_zero()) {
    den_ = Poly(1L);
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_value();
    if (c != 1) num_ = num_.scaled(1 / c);
    den_ = Poly(1L);
    return;
  }
  Integer lcm = 1, g = 0;
  for (const auto* p : {&num_, &den_})
    for (const auto& t : p->terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Rational scale(lcm);
  for (const auto* p : {&num_, &den_})
    for (const auto& t : p->terms()) {
      Rational c = t.coeff * scale;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
  scale /= Rational(g);
  if (den_.leading().coeff < 0) scale = -scale;
  if (scale != 1) {
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
  }
}

bool Frac::is_one() const { return num_ == den_; }

Rational Frac::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of non-constant fraction");
  return num_.constant_value() / den_.constant_value();
}

Frac Frac::operator-() const {
  Frac r = *this;
  r.num_ = -r.num_;
  return r;
}

Frac& Frac::operator+=(const Frac& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    Rational a = den_.constant_value(), b = o.den_.constant_value();
    num_ = num_.scaled(1 / a) + o.num_.scaled(1 / b);
    den_ = Poly(1L);
    return *this;
  }
  if (den_ == o.den_) {
    *this = Frac(num_ + o.num_, den_);
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    Poly n = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    num_ = std::move(n);
    canonical_scale();
    return *this;
  }
  Poly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
  Poly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = Frac();
  Poly g2 = gcd(t, g);
  num_ = exact_div(t, g2);
  den_ = b1 * exact_div(o.den_, g2);
  canonical_scale();
  return *this;
}

Frac& Frac::operator-=(const Frac& o) { return *this += -o; }

Frac& Frac::operator*=(const Frac& o) {
  if (is_zero() || o.is_zero()) return *this = Frac();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = (num_ * o.num_).scaled(1 / (den_.constant_value() * o.den_.constant_value()));
    den_ = Poly(1L);
    return *this;
  }
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant() && !a.is_constant()) {
    Poly g1 = gcd(a, d);
    if (!g1.is_constant()) {
      a = exact_div(a, g1);
      d = exact_div(d, g1);
    }
  }
  if (!b.is_constant() && !c.is_constant()) {
    Poly g2 = gcd(c, b);
    if (!g2.is_constant()) {
      c = exact_div(c, g2);
      b = exact_div(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  canonical_scale();
  return *this;
}

Frac Frac::inverse() const {
  if (num_.is_zero()) throw PoleError("inverse of zero");
  Frac r;
  r.num_ = den_;
  r.den_ = num_;
  r.canonical_scale();
  return r;
}

Frac& Frac::operator/=(const Frac& o) { return *this *= o.inverse(); }

Frac Frac::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Frac r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.canonical_scale();
  return r;
}

Frac Frac::derivative(std::size_t s) const {
  if (den_.is_constant()) return Frac(num_.derivative(s), den_);
  return Frac(num_.derivative(s) * den_ - num_ * den_.derivative(s), den_ * den_);
}

Frac Frac::reduced() const { return Frac(num_, den_); }

bool operator==(const Frac& a, const Frac& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool frac_equal(const Frac& a, const Frac& b) { return a == b; }

// ---------------------------------------------------------------- substitution

namespace {

struct Homogenized {
  Poly value;
  Poly denominator;
};

// P(bound slots := a_s / b_s) written as value / denominator with
// denominator = prod b_s^(deg_s P).
Homogenized evaluate(const Poly& p, const std::map<std::size_t, Frac>& bindings) {
  std::map<std::size_t, unsigned> degrees;
  for (const auto& [s, v] : bindings) degrees[s] = p.degree_in(s);

  std::map<std::size_t, std::vector<Poly>> num_pows, den_pows;
  for (const auto& [s, v] : bindings) {
    unsigned d = degrees[s];
    auto& np = num_pows[s];
    auto& dp = den_pows[s];
    np.push_back(Poly(1L));
    dp.push_back(Poly(1L));
    for (unsigned e = 1; e <= d; ++e) {
      np.push_back(np.back() * v.num());
      dp.push_back(dp.back() * v.den());
    }
  }

  Poly out;
  std::map<std::vector<unsigned>, Poly> grouped;  // group terms by bound exponent pattern
  for (const auto& t : p.terms()) {
    std::vector<unsigned> pattern;
    Monomial free = t.mono;
    for (const auto& [s, v] : bindings) {
      pattern.push_back(t.mono[s]);
      free.set(s, 0);
    }
    grouped[pattern] += Poly(free, t.coeff);
  }
  for (const auto& [pattern, rest] : grouped) {
    Poly factor(1L);
    std::size_t i = 0;
    for (const auto& [s, v] : bindings) {
      unsigned e = pattern[i++];
      unsigned d = degrees[s];
      const Poly& a = num_pows[s][e];
      const Poly& b = den_pows[s][d - e];
      if (!a.is_one()) factor = factor * a;
      if (!b.is_one()) factor = factor * b;
    }
    out += rest * factor;
  }
  Poly den(1L);
  for (const auto& [s, v] : bindings) {
    unsigned d = degrees[s];
    if (d) den = den * den_pows[s][d];
  }
  return {std::move(out), std::move(den)};
}

}  // namespace

Frac substitute_slots(const Frac& f, const std::map<std::size_t, Frac>& bindings) {
  std::map<std::size_t, Frac> relevant;
  std::uint32_t mask = f.variable_mask();
  for (const auto& [s, v] : bindings)
    if ((mask >> s) & 1U) relevant.emplace(s, v);
  if (relevant.empty()) return f;
  Homogenized n = evaluate(f.num(), relevant);
  Homogenized d = evaluate(f.den(), relevant);
  if (d.value.is_zero()) throw PoleError("denominator " + to_string(f.den()) + " vanishes under substitution");
  return Frac(n.value * d.denominator, d.value * n.denominator);
}

Frac substitute(const Frac& f, const Bindings& bindings) {
  std::map<std::size_t, Frac> by_slot;
  for (const auto& [p, v] : bindings) by_slot.emplace(slot(p), v);
  return substitute_slots(f, by_slot);
}

Frac limit_along_parameter(const Frac& f, Param param, const Rational& value) {
  std::size_t s = slot(param);
  Poly num = f.num(), den = f.den();
  Poly linear = Poly::variable(s) - Poly(value);
  auto vanishes = [&](const Poly& p) { return p.substitute(s, Poly(value)).is_zero(); };
  while (!num.is_zero() && vanishes(num) && vanishes(den)) {
    num = exact_div(num, linear);
    den = exact_div(den, linear);
  }
  Poly den_at = den.substitute(s, Poly(value));
  if (den_at.is_zero())
    throw PoleError("pole at " + param_name(param) + " = " + value.get_str() + " in " + to_string(f));
  return Frac(num.substitute(s, Poly(value)), den_at);
}

// ---------------------------------------------------------------- text

std::string param_name(Param p) { return slot_name(slot(p)); }

std::optional<Param> param_from_name(const std::string& name) {
  auto s = slot_from_name(name);
  if (!s || *s >= kNumParams) return std::nullopt;
  return static_cast<Param>(*s);
}

namespace {

bool is_simple_token(const std::string& s) {
  if (s.empty()) return false;
  bool digits = true, ident = std::isalpha(static_cast<unsigned char>(s[0])) != 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    if (!std::isalnum(static_cast<unsigned char>(c))) ident = false;
  }
  return digits || ident;
}

std::string wrap(const std::string& s) { return is_simple_token(s) ? s : "(" + s + ")"; }

}  // namespace

std::string to_string(const Frac& f) {
  if (f.den().is_one()) return to_string(f.num());
  return wrap(to_string(f.num())) + "/" + wrap(to_string(f.den()));
}

Frac parse_frac(std::string_view text) {
  auto atom = [](const std::string& name) -> Frac {
    auto p = param_from_name(name);
    if (!p) throw ParseError("unknown parameter '" + name + "'");
    return Frac::param(*p);
  };
  auto div = [](const Frac& a, const Frac& b) -> Frac {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  };
  return detail::parse_expression<Frac>(text, atom, div);
}

}  // namespace cmsym

namespace cmsym {

std::optional<Frac> sqrt_exact(const Frac& f) {
  auto root = sqrt_exact(f.num() * f.den());
  if (!root) return std::nullopt;
  return Frac(*root, f.den());
}

}  // namespace cmsym
