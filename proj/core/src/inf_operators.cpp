#include "cmsym/inf_operators.hpp"

#include <set>
#include <stdexcept>

namespace cmsym {

std::string family_name(Family f) {
  switch (f) {
    case Family::TrigA: return "trigA";
    case Family::RatA: return "ratA";
    case Family::RatB: return "ratB";
    case Family::TrigBC: return "trigBC";
  }
  return "";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::TrigA, Family::RatA, Family::RatB, Family::TrigBC})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

InfOperator::InfOperator(Family family, Bindings bindings) : family_(family), bindings_(std::move(bindings)) {}

Frac InfOperator::param(Param p) const {
  auto it = bindings_.find(p);
  return it == bindings_.end() ? Frac::param(p) : it->second;
}

InfOperator InfOperator::with(Param p, const Frac& value) const {
  InfOperator r = *this;
  r.bindings_[p] = value;
  return r;
}

SymFun differentiate(const Partition& lambda, int a) {
  int mult = lambda.multiplicity(a);
  if (!mult) return {};
  return SymFun::monomial(lambda.without_part(a), Frac(static_cast<long>(a) * mult));
}

namespace {

// Image of p_lambda under the operator, built term group by term group.
class Action {
 public:
  Action(const InfOperator& op, const Partition& lambda) : op_(op), lambda_(lambda) {
    parts_.insert(lambda.parts().begin(), lambda.parts().end());
  }

  // p_i, with p_0 the parameter and negative indices zero.
  SymFun P(int i) const {
    if (i < 0) return {};
    if (i == 0) return SymFun::constant(op_.param(Param::p0));
    return SymFun::power_sum(i);
  }

  // sum over a of mult(a) * d_a p_lambda
  template <class Fn>
  void first(Fn mult) {
    for (int a : parts_) {
      SymFun m = mult(a);
      if (!m.is_zero()) out_ += m * differentiate(lambda_, a);
    }
  }

  // sum over a, b of mult(a, b) * d_a d_b p_lambda
  template <class Fn>
  void second(Fn mult) {
    for (int b : parts_) {
      SymFun db = differentiate(lambda_, b);
      for (const auto& [rest, c] : db.terms())
        for (int a : parts_) {
          SymFun dab = differentiate(rest, a);
          if (dab.is_zero()) continue;
          SymFun m = mult(a, b);
          if (!m.is_zero()) out_ += m * dab.scaled(c);
        }
    }
  }

  SymFun result() const { return out_; }

 private:
  const InfOperator& op_;
  const Partition& lambda_;
  std::set<int> parts_;
  SymFun out_;
};

SymFun apply_trig_a(const InfOperator& op, const Partition& lambda) {
  Action act(op, lambda);
  Frac k = op.param(Param::k), p0 = op.param(Param::p0);
  act.second([&](int a, int b) { return act.P(a + b); });
  act.first([&](int c) {
    SymFun s;
    for (int a = 1; a < c; ++a) s += act.P(a) * act.P(c - a);
    return s.scaled(-k);
  });
  act.first([&](int a) { return act.P(a).scaled(-k * p0); });
  act.first([&](int a) { return act.P(a).scaled((Frac(1L) + k) * Frac(static_cast<long>(a))); });
  return act.result();
}

SymFun apply_rat_a(const InfOperator& op, const Partition& lambda) {
  Action act(op, lambda);
  Frac k = op.param(Param::k);
  act.second([&](int a, int b) { return act.P(a + b - 2); });
  act.first([&](int c) {
    SymFun s;
    for (int a = 0; a <= c - 2; ++a) s += act.P(a) * act.P(c - 2 - a);
    return s.scaled(-k);
  });
  act.first([&](int a) {
    if (a < 2) return SymFun();
    return act.P(a - 2).scaled((Frac(1L) + k) * Frac(static_cast<long>(a - 1)));
  });
  return act.result();
}

SymFun apply_rat_b(const InfOperator& op, const Partition& lambda) {
  Action act(op, lambda);
  Frac k = op.param(Param::k), l = op.param(Param::l), p0 = op.param(Param::p0);
  act.second([&](int a, int b) { return act.P(a + b - 1); });
  act.first([&](int c) {
    SymFun s;
    for (int a = 1; a <= c - 2; ++a) s += act.P(a) * act.P(c - 1 - a);
    return s.scaled(-k);
  });
  act.first([&](int a) { return act.P(a - 1).scaled((Frac(1L) + k) * Frac(static_cast<long>(a))); });
  Frac shift = -(Frac(2L) * k * p0 + l + Frac(Rational(1, 2)));
  act.first([&](int a) { return act.P(a - 1).scaled(shift); });
  act.first([&](int a) { return a == 1 ? SymFun::constant(k * p0 * p0) : SymFun(); });
  return act.result();
}

SymFun apply_trig_bc(const InfOperator& op, const Partition& lambda) {
  Action act(op, lambda);
  Frac k = op.param(Param::k), p = op.param(Param::p), h = op.param(Param::h);
  act.second([&](int a, int b) { return act.P(a + b) + act.P(a + b - 1).scaled(Frac(2L)); });
  act.first([&](int a) {
    SymFun s;
    for (int b = 0; b <= a - 2; ++b) s += act.P(a - b - 1) * (act.P(b).scaled(Frac(2L)) + act.P(b + 1));
    return s.scaled(-k);
  });
  act.first([&](int a) {
    Frac A(static_cast<long>(a));
    Frac diag = A + k * (A + Frac(1L)) + Frac(2L) * h;
    Frac low = Frac(2L) * A - Frac(1L) + Frac(2L) * k * A + Frac(2L) * h - p;
    return act.P(a).scaled(diag) + act.P(a - 1).scaled(low);
  });
  return act.result();
}

SymFun apply_monomial(const InfOperator& op, const Partition& lambda) {
  switch (op.family()) {
    case Family::TrigA: return apply_trig_a(op, lambda);
    case Family::RatA: return apply_rat_a(op, lambda);
    case Family::RatB: return apply_rat_b(op, lambda);
    case Family::TrigBC: return apply_trig_bc(op, lambda);
  }
  return {};
}

}  // namespace

SymFun apply_inf(const InfOperator& op, const SymFun& f, int degree_cap) {
  SymFun out;
  for (const auto& [lambda, c] : f.terms()) {
    if (degree_cap >= 0 && lambda.weight() > degree_cap) continue;
    if (lambda.empty()) continue;
    out += apply_monomial(op, lambda).scaled(c);
  }
  return out;
}

SymFun momentum(const SymFun& f) {
  SymFun out;
  for (const auto& [lambda, c] : f.terms())
    if (lambda.weight()) out.add_term(lambda, c * Frac(static_cast<long>(lambda.weight())));
  return out;
}

bool commutator_vanishes(const InfOperator& op, int D) {
  if (op.family() != Family::TrigA)
    throw std::invalid_argument("commutator with P is only defined for the degree-preserving trigA operator");
  for (const auto& lambda : partitions_up_to(D)) {
    SymFun p = SymFun::monomial(lambda);
    if (!(apply_inf(op, momentum(p)) - momentum(apply_inf(op, p))).is_zero()) return false;
  }
  return true;
}

}  // namespace cmsym
