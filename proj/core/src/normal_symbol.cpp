#include "cmsym/normal_symbol.hpp"

#include <stdexcept>
#include <vector>

namespace cmsym {

Frac NormalSymbol::coefficient(const Partition& lambda, const Partition& mu) const {
  auto it = terms_.find({lambda, mu});
  return it == terms_.end() ? Frac() : it->second;
}

void NormalSymbol::add_term(const Partition& lambda, const Partition& mu, const Frac& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({lambda, mu}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalSymbol& NormalSymbol::operator+=(const NormalSymbol& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

NormalSymbol& NormalSymbol::operator-=(const NormalSymbol& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

bool operator==(const NormalSymbol& a, const NormalSymbol& b) { return (NormalSymbol(a) -= b).is_zero(); }

NormalSymbol NormalSymbol::window(int dp, int dd) const {
  NormalSymbol r;
  for (const auto& [key, c] : terms_)
    if (key.first.weight() <= dp && key.second.weight() <= dd) r.terms_.emplace(key, c);
  return r;
}

SymFun apply_symbol(const NormalSymbol& s, const SymFun& f) {
  SymFun out;
  for (const auto& [nu, fc] : f.terms())
    for (const auto& [key, c] : s.terms()) {
      const auto& [lambda, mu] = key;
      SymFun image = SymFun::monomial(nu, fc * c);
      for (int a : mu.parts()) {
        SymFun next;
        for (const auto& [rho, rc] : image.terms()) next += differentiate(rho, a).scaled(rc);
        image = std::move(next);
        if (image.is_zero()) break;
      }
      if (!image.is_zero()) out += SymFun::monomial(lambda) * image;
    }
  return out;
}

namespace {

// Collects c * p_{ps} d_{ds}; an index 0 in ps is the parameter p0 and a
// negative index makes the term vanish.
class SymbolBuilder {
 public:
  SymbolBuilder(const InfOperator& op, int dp, int dd) : p0_(op.param(Param::p0)), dp_(dp), dd_(dd) {}

  void add(std::vector<int> ps, std::vector<int> ds, Frac c) {
    std::vector<int> kept;
    for (int a : ps) {
      if (a < 0) return;
      if (a == 0)
        c *= p0_;
      else
        kept.push_back(a);
    }
    Partition lambda(std::move(kept)), mu(std::move(ds));
    if (lambda.weight() > dp_ || mu.weight() > dd_) return;
    out_.add_term(lambda, mu, c);
  }

  NormalSymbol result() const { return out_; }

 private:
  Frac p0_;
  int dp_, dd_;
  NormalSymbol out_;
};

}  // namespace

NormalSymbol normal_symbol(const InfOperator& op, int dp, int dd) {
  if (dp < 1 || dd < 1) throw std::invalid_argument("symbol window cutoffs must be >= 1");
  SymbolBuilder s(op, dp, dd);
  Frac k = op.param(Param::k);
  const Frac one(1L), two(2L);
  // Derivative indices never exceed dd, and the p-side weight is bounded by
  // dp, so these loops cover the whole window.
  switch (op.family()) {
    case Family::TrigA:
      for (int a = 1; a <= dd; ++a)
        for (int b = 1; a + b <= dd; ++b) {
          s.add({a + b}, {a, b}, one);
          s.add({a, b}, {a + b}, -k);
        }
      for (int a = 1; a <= dd; ++a) s.add({a}, {a}, (one + k) * Frac(static_cast<long>(a)) - k * op.param(Param::p0));
      break;
    case Family::RatA:
      for (int a = 1; a <= dd; ++a)
        for (int b = 1; a + b <= dd; ++b) s.add({a + b - 2}, {a, b}, one);
      for (int c = 2; c <= dd; ++c)
        for (int a = 0; a <= c - 2; ++a) s.add({a, c - 2 - a}, {c}, -k);
      for (int a = 2; a <= dd; ++a) s.add({a - 2}, {a}, (one + k) * Frac(static_cast<long>(a - 1)));
      break;
    case Family::RatB: {
      Frac p0 = op.param(Param::p0);
      Frac shift = -(two * k * p0 + op.param(Param::l) + Frac(Rational(1, 2)));
      for (int a = 1; a <= dd; ++a)
        for (int b = 1; a + b <= dd; ++b) s.add({a + b - 1}, {a, b}, one);
      for (int c = 3; c <= dd; ++c)
        for (int a = 1; a <= c - 2; ++a) s.add({a, c - 1 - a}, {c}, -k);
      for (int a = 1; a <= dd; ++a) {
        s.add({a - 1}, {a}, (one + k) * Frac(static_cast<long>(a)));
        s.add({a - 1}, {a}, shift);
      }
      s.add({}, {1}, k * p0 * p0);
      break;
    }
    case Family::TrigBC: {
      Frac p = op.param(Param::p), h = op.param(Param::h);
      for (int a = 1; a <= dd; ++a)
        for (int b = 1; a + b <= dd; ++b) {
          s.add({a + b}, {a, b}, one);
          s.add({a + b - 1}, {a, b}, two);
        }
      for (int a = 2; a <= dd; ++a)
        for (int b = 0; b <= a - 2; ++b) {
          s.add({a - b - 1, b}, {a}, -two * k);
          s.add({a - b - 1, b + 1}, {a}, -k);
        }
      for (int a = 1; a <= dd; ++a) {
        Frac A(static_cast<long>(a));
        s.add({a}, {a}, A + k * (A + one) + two * h);
        s.add({a - 1}, {a}, two * A - one + two * k * A + two * h - p);
      }
      break;
    }
  }
  return s.result();
}

namespace {

long binomial(int n, int r) {
  long b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

NormalSymbol reorder(const Partition& d_left, const Partition& p_right, const Frac& c) {
  // Each way of pairing r equal indices a between the two sides contributes
  // a^r times the number of such pairings.
  std::vector<int> values;
  for (int a : d_left.parts())
    if (p_right.multiplicity(a) && (values.empty() || values.back() != a)) values.push_back(a);

  NormalSymbol out;
  std::vector<int> r(values.size(), 0);
  while (true) {
    Frac coeff = c;
    Partition ds = d_left, ps = p_right;
    for (std::size_t i = 0; i < values.size(); ++i) {
      int a = values[i], ri = r[i];
      if (!ri) continue;
      long ways = binomial(d_left.multiplicity(a), ri) * binomial(p_right.multiplicity(a), ri) * factorial(ri);
      Rational weight = ways;
      for (int t = 0; t < ri; ++t) weight *= a;
      coeff *= Frac(weight);
      for (int t = 0; t < ri; ++t) {
        ds = ds.without_part(a);
        ps = ps.without_part(a);
      }
    }
    out.add_term(ps, ds, coeff);
    std::size_t i = 0;
    for (; i < values.size(); ++i) {
      int cap = std::min(d_left.multiplicity(values[i]), p_right.multiplicity(values[i]));
      if (r[i] < cap) {
        ++r[i];
        break;
      }
      r[i] = 0;
    }
    if (i == values.size()) break;
  }
  return out;
}

namespace {

NormalSymbol swap_term(const Partition& lambda, const Partition& mu, const Frac& c, const Frac& k) {
  Frac factor = c * (-k.inverse()).pow(lambda.length()) * (-k).pow(mu.length());
  return reorder(lambda, mu, factor);
}

}  // namespace

FourierReport fourier_swap_check(const InfOperator& op, int cutoff) {
  if (op.family() != Family::TrigA) throw std::invalid_argument("Fourier swap is defined for the trigA operator");
  Frac k = op.param(Param::k);
  NormalSymbol sym = normal_symbol(op, cutoff, cutoff);
  NormalSymbol two_d, two_p, diag;
  for (const auto& [key, c] : sym.terms()) {
    const auto& [lambda, mu] = key;
    if (lambda.length() == 1 && mu.length() == 2)
      two_d.add_term(lambda, mu, c);
    else if (lambda.length() == 2 && mu.length() == 1)
      two_p.add_term(lambda, mu, c);
    else if (lambda.length() == 1 && lambda == mu)
      diag.add_term(lambda, mu, c);
  }
  auto swapped = [&](const NormalSymbol& block) {
    NormalSymbol out;
    for (const auto& [key, c] : block.terms()) out += swap_term(key.first, key.second, c, k);
    return out;
  };

  FourierReport report;
  report.cutoff = cutoff;
  report.two_derivative_block_maps_to_two_p_block = !two_d.is_zero() && swapped(two_d) == two_p;
  report.two_p_block_maps_to_two_derivative_block = !two_p.is_zero() && swapped(two_p) == two_d;
  bool preserved = true;
  for (const auto& [key, c] : diag.terms()) {
    NormalSymbol image = swap_term(key.first, key.second, c, k);
    int a = key.first[0];
    Frac constant = image.coefficient(Partition(), Partition());
    report.reordering_constants[a] = constant;
    image.add_term(Partition(), Partition(), -constant);
    NormalSymbol expected;
    expected.add_term(key.first, key.second, c);
    if (!(image == expected)) preserved = false;
  }
  report.diagonal_block_preserved = preserved && !diag.is_zero();
  return report;
}

}  // namespace cmsym
