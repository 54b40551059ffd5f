#include "cmsym/symfun.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

#include "cmsym/linalg.hpp"

namespace cmsym {

SymFun SymFun::constant(const Frac& c) { return monomial(Partition(), c); }

SymFun SymFun::power_sum(int a) { return monomial(Partition{a}); }

SymFun SymFun::monomial(const Partition& lambda, const Frac& c) {
  SymFun f;
  f.add_term(lambda, c);
  return f;
}

Frac SymFun::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Frac() : it->second;
}

void SymFun::add_term(const Partition& lambda, const Frac& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFun SymFun::operator-() const {
  SymFun r = *this;
  for (auto& [l, c] : r.terms_) c = -c;
  return r;
}

SymFun& SymFun::operator+=(const SymFun& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b) {
  SymFun r;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) r.add_term(la.merged(lb), ca * cb);
  return r;
}

SymFun SymFun::scaled(const Frac& c) const {
  SymFun r;
  if (c.is_zero()) return r;
  for (const auto& [l, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), l, x * c);
  return r;
}

int SymFun::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

SymFun SymFun::truncated(int d) const {
  SymFun r;
  for (const auto& [l, c] : terms_)
    if (l.weight() <= d) r.terms_.emplace_hint(r.terms_.end(), l, c);
  return r;
}

SymFun SymFun::homogeneous_component(int e) const {
  SymFun r;
  for (const auto& [l, c] : terms_)
    if (l.weight() == e) r.terms_.emplace_hint(r.terms_.end(), l, c);
  return r;
}

SymFun SymFun::map_coefficients(const std::function<Frac(const Frac&)>& fn) const {
  SymFun r;
  for (const auto& [l, c] : terms_) r.add_term(l, fn(c));
  return r;
}

bool operator==(const SymFun& a, const SymFun& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  return true;
}

std::string to_string(const SymFun& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [lambda, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += "p" + std::to_string(parts[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    std::string cs = to_string(c);
    bool simple = cs.find_first_of(" /*^") == std::string::npos && cs.find('-', 1) == std::string::npos;
    if (mono.empty())
      out += cs;
    else if (c.is_one())
      out += mono;
    else
      out += (simple ? cs : "(" + cs + ")") + " * " + mono;
  }
  return out;
}

MPoly phi_N(const SymFun& f, int N) {
  VarLayout layout = VarLayout::z(N);
  Bindings at_n{{Param::p0, Frac(static_cast<long>(N))}};
  std::unordered_map<int, MPoly> power_sums;
  auto power_sum = [&](int a) -> const MPoly& {
    auto it = power_sums.find(a);
    if (it != power_sums.end()) return it->second;
    MPoly s(layout);
    for (int i = 0; i < N; ++i) s.add_term(Monomial::variable(static_cast<std::size_t>(i), static_cast<unsigned>(a)), Frac(1L));
    return power_sums.emplace(a, std::move(s)).first->second;
  };
  MPoly out(layout);
  for (const auto& [lambda, c] : f.terms()) {
    Frac coeff = substitute(c, at_n);
    if (coeff.is_zero()) continue;
    MPoly term = MPoly::constant(layout, coeff);
    for (int a : lambda.parts()) term = term * power_sum(a);
    out += term;
  }
  return out;
}

Frac MBasisExpansion::coefficient(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? Frac() : it->second;
}

bool operator==(const MBasisExpansion& a, const MBasisExpansion& b) {
  auto nonzero = [](const MBasisExpansion& e) {
    std::size_t n = 0;
    for (const auto& [l, c] : e.coeffs)
      if (!c.is_zero()) ++n;
    return n;
  };
  if (nonzero(a) != nonzero(b)) return false;
  for (const auto& [l, c] : a.coeffs)
    if (b.coefficient(l) != c) return false;
  return true;
}

namespace {

// Counts assignments of the parts of lambda (from index i on) to the rows of
// mu so that the parts in row j sum to mu_j, given the remaining row capacity.
long count_fillings(const std::vector<int>& parts, std::size_t i, std::vector<int>& room,
                    std::map<std::pair<std::size_t, std::vector<int>>, long>& memo) {
  if (i == parts.size()) {
    for (int r : room)
      if (r) return 0;
    return 1;
  }
  auto key = std::make_pair(i, room);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  long total = 0;
  for (std::size_t j = 0; j < room.size(); ++j) {
    if (room[j] < parts[i]) continue;
    room[j] -= parts[i];
    total += count_fillings(parts, i + 1, room, memo);
    room[j] += parts[i];
  }
  memo.emplace(std::move(key), total);
  return total;
}

struct Transition {
  std::vector<Partition> basis;
  std::map<Partition, std::size_t> index;
  Matrix<Rational> p_in_m;  // row lambda: p_lambda in the m basis
  Matrix<Rational> m_in_p;  // row mu: m_mu in the p basis
};

const Transition& transition(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Transition>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (slot) return *slot;
  auto t = std::make_unique<Transition>();
  t->basis = partitions_of(d);
  std::size_t n = t->basis.size();
  for (std::size_t i = 0; i < n; ++i) t->index.emplace(t->basis[i], i);
  t->p_in_m.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t->p_in_m[i][j] = power_to_monomial_coefficient(t->basis[i], t->basis[j]);
  // p = T m  =>  m = T^{-1} p.
  t->m_in_p = *inverse(t->p_in_m);
  slot = std::move(t);
  return *slot;
}

}  // namespace

Rational power_to_monomial_coefficient(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  std::vector<int> room = mu.parts();
  std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
  return Rational(count_fillings(lambda.parts(), 0, room, memo));
}

MBasisExpansion p_to_m(const SymFun& f, int d) {
  MBasisExpansion out;
  out.degree = d;
  for (const auto& [lambda, c] : f.terms()) {
    if (lambda.weight() > d) continue;
    const Transition& t = transition(lambda.weight());
    const auto& row = t.p_in_m[t.index.at(lambda)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      Frac add = c * Frac(row[j]);
      auto [it, inserted] = out.coeffs.try_emplace(t.basis[j], add);
      if (!inserted) it->second += add;
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

SymFun monomial_symmetric(const Partition& lambda) {
  const Transition& t = transition(lambda.weight());
  const auto& row = t.m_in_p[t.index.at(lambda)];
  SymFun f;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) f.add_term(t.basis[j], Frac(row[j]));
  return f;
}

SymFun m_to_p(const MBasisExpansion& e) {
  SymFun f;
  for (const auto& [mu, c] : e.coeffs) {
    if (c.is_zero()) continue;
    f += monomial_symmetric(mu).scaled(c);
  }
  return f;
}

}  // namespace cmsym
