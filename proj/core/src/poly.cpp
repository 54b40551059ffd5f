#include "cmsym/poly.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

namespace cmsym {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t slot, unsigned power) {
  Monomial m;
  m.set(slot, power);
  return m;
}

void Monomial::set(std::size_t slot, unsigned power) {
  if (slot >= kMaxVars) throw std::out_of_range("monomial slot out of range");
  if (power > 255) throw std::overflow_error("monomial exponent exceeds 255");
  exps_[slot] = static_cast<std::uint8_t>(power);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(exps_[i]) + other.exps_[i];
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.exps_[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.raw() < b.raw();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t lo, hi;
  std::memcpy(&lo, m.raw().data(), 8);
  std::memcpy(&hi, m.raw().data() + 8, 8);
  return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x7F4A7C159E3779B9ULL));
}

// ---------------------------------------------------------------- Poly

namespace {

bool term_before(const Poly::Term& a, const Poly::Term& b) { return grlex_less(b.mono, a.mono); }

}  // namespace

Poly::Poly(long value) {
  if (value != 0) terms_.push_back({Monomial{}, Rational(value)});
}

Poly::Poly(const Rational& value) {
  if (value != 0) terms_.push_back({Monomial{}, value});
}

Poly::Poly(const Monomial& mono, const Rational& coeff) {
  if (coeff != 0) terms_.push_back({mono, coeff});
}

Poly Poly::variable(std::size_t slot) { return Poly(Monomial::variable(slot), Rational(1)); }

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Poly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value of non-constant polynomial");
  return terms_[0].coeff;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Poly::degree_in(std::size_t slot) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[slot]);
  return d;
}

std::uint32_t Poly::variable_mask() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.mono[i]) mask |= (1U << i);
  return mask;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].mono, a[i].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].mono, b[j].mono)) {
      out.push_back(b[j++]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge_terms<false>(terms_, other.terms_);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, other.terms_);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.size() == 1) return b.times_monomial(a.terms_[0].mono).scaled(a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].mono).scaled(b.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(x.mono * y.mono, prod);
      if (!inserted) it->second += prod;
    }
  }
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(), term_before);
  return r;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;  // grlex is compatible with multiplication
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1L), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return Poly();
  if (divisor.size() == 1) {
    const auto& d = divisor.terms_[0];
    Poly q = *this;
    for (auto& t : q.terms_) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      t.mono = t.mono / d.mono;
      t.coeff /= d.coeff;
    }
    return q;
  }
  // Leading-term division; with a monomial order every exact quotient is found.
  const auto& lead = divisor.terms_.front();
  Poly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const auto& rt = rem.terms_.front();
    if (!lead.mono.divides(rt.mono)) return std::nullopt;
    Term qt{rt.mono / lead.mono, rt.coeff / lead.coeff};
    rem -= divisor.times_monomial(qt.mono).scaled(qt.coeff);
    quot.push_back(std::move(qt));
  }
  Poly q;
  q.terms_ = std::move(quot);  // produced in strictly decreasing order
  return q;
}

Poly Poly::derivative(std::size_t slot) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[slot];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(slot, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(std::move(out));
}

std::vector<Poly> Poly::coefficients_in(std::size_t slot) const {
  std::vector<std::vector<Term>> buckets(degree_in(slot) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m[slot];
    m.set(slot, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Poly p;
    p.terms_ = std::move(b);
    std::sort(p.terms_.begin(), p.terms_.end(), term_before);
    out.push_back(std::move(p));
  }
  return out;
}

Poly Poly::from_coefficients(std::size_t slot, const std::vector<Poly>& coeffs) {
  std::vector<Term> all;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    Monomial x = Monomial::variable(slot, static_cast<unsigned>(e));
    for (const auto& t : coeffs[e].terms_) all.push_back({t.mono * x, t.coeff});
  }
  return from_terms(std::move(all));
}

Poly Poly::substitute(std::size_t slot, const Poly& value) const {
  auto coeffs = coefficients_in(slot);
  // Horner in the substituted slot.
  Poly acc;
  for (std::size_t e = coeffs.size(); e-- > 0;) {
    acc = acc * value;
    acc += coeffs[e];
  }
  return acc;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(0);
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return Poly();
  Rational c = content();
  if (terms_.front().coeff < 0) c = -c;
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff /= c;
  return r;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) h = h * 1000003U ^ MonomialHash{}(t.mono);
  return h;
}

// ---------------------------------------------------------------- names

namespace {

std::vector<std::string> make_slot_names() {
  std::vector<std::string> names = {"k", "p", "q", "h", "p0", "l"};
  for (std::size_t i = names.size(); i < kMaxVars; ++i) names.push_back("t" + std::to_string(i - 5));
  return names;
}

const std::vector<std::string>& slot_names() {
  static const std::vector<std::string> names = make_slot_names();
  return names;
}

}  // namespace

const std::string& slot_name(std::size_t slot) { return slot_names().at(slot); }

std::optional<std::size_t> slot_from_name(const std::string& name) {
  const auto& names = slot_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += slot_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace cmsym

namespace cmsym {

std::optional<Poly> sqrt_exact(const Poly& a) {
  if (a.is_zero()) return Poly();
  const Poly::Term& lead = a.leading();
  if (lead.coeff < 0) return std::nullopt;
  mpz_class n = lead.coeff.get_num(), d = lead.coeff.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Rational c(sqrt(n), sqrt(d));
  c.canonicalize();
  Monomial m;
  for (std::size_t s = 0; s < kMaxVars; ++s) {
    if (lead.mono[s] % 2) return std::nullopt;
    m.set(s, lead.mono[s] / 2);
  }
  Poly r(m, c);
  Poly rem = a - r * r;
  // Each step cancels the leading term of the remainder; the remainder's
  // leading monomial strictly decreases, so the loop is finite.
  while (!rem.is_zero()) {
    const Poly::Term& t = rem.leading();
    if (!m.divides(t.mono)) return std::nullopt;
    Monomial q = t.mono / m;
    if (!grlex_less(q, m)) return std::nullopt;
    Poly term(q, t.coeff / (2 * c));
    rem -= term * (r + r + term);
    r += term;
  }
  return r;
}

}  // namespace cmsym
