#include "cmsym/duality.hpp"

#include <optional>

#include "cmsym/errors.hpp"
#include "cmsym/linalg.hpp"

namespace cmsym {

namespace {

std::vector<Partition> nonempty_up_to(int d) {
  std::vector<Partition> out;
  for (const auto& l : partitions_up_to(d))
    if (!l.empty()) out.push_back(l);
  return out;
}

// sigma^{-1} L sigma p_lambda with sigma: p_a -> k p_a.
SymFun conjugated(const InfOperator& op, const Partition& lambda) {
  Frac k = op.param(Param::k);
  SymFun image = apply_inf(op, SymFun::monomial(lambda, k.pow(lambda.length())));
  SymFun out;
  for (const auto& [mu, c] : image.terms()) out.add_term(mu, c * k.pow(-mu.length()));
  return out;
}

// Solves target = sum_i y_i basis_i on every listed p_lambda; nullopt unless
// the solution exists and is unique.
std::optional<std::vector<Frac>> fit(const std::vector<SymFun>& target, const std::vector<std::vector<SymFun>>& basis) {
  std::size_t n = basis.size();
  Matrix<Frac> rows;
  for (std::size_t j = 0; j < target.size(); ++j) {
    std::map<Partition, std::vector<Frac>> eqs;
    auto row = [&](const Partition& mu) -> std::vector<Frac>& {
      auto it = eqs.find(mu);
      if (it == eqs.end()) it = eqs.emplace(mu, std::vector<Frac>(n + 1)).first;
      return it->second;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [mu, c] : basis[i][j].terms()) row(mu)[i] += c;
    for (const auto& [mu, c] : target[j].terms()) row(mu)[n] -= c;
    for (auto& [mu, r] : eqs) rows.push_back(std::move(r));
  }
  auto kernel = nullspace(rows, n + 1);
  if (kernel.size() != 1 || kernel[0][n].is_zero()) return std::nullopt;
  std::vector<Frac> y(n);
  Frac scale = kernel[0][n].inverse();
  for (std::size_t i = 0; i < n; ++i) y[i] = kernel[0][i] * scale;
  return y;
}

std::vector<SymFun> images(const InfOperator& op, const std::vector<Partition>& lambdas) {
  std::vector<SymFun> out;
  for (const auto& l : lambdas) out.push_back(apply_inf(op, SymFun::monomial(l)));
  return out;
}

std::vector<SymFun> difference(const std::vector<SymFun>& a, const std::vector<SymFun>& b) {
  std::vector<SymFun> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

bool verify(const InfOperator& op, Family family, const DualityCandidate& cand, int D) {
  InfOperator hat(family, cand.map);
  for (const auto& lambda : nonempty_up_to(D))
    if (conjugated(op, lambda) != apply_inf(hat, SymFun::monomial(lambda)).scaled(cand.c)) return false;
  return true;
}

bool involutive(const Bindings& map, std::initializer_list<Param> free) {
  Bindings restricted;
  for (Param p : free) restricted.emplace(p, map.at(p));
  for (Param p : free)
    if (substitute(map.at(p), restricted) != Frac::param(p)) return false;
  return true;
}

Bindings numeric(std::initializer_list<std::pair<Param, Rational>> values) {
  Bindings b;
  for (const auto& [p, v] : values) b.emplace(p, Frac(v));
  return b;
}

}  // namespace

std::string describe(const Bindings& map) {
  std::string out;
  for (const auto& [p, v] : map) {
    if (!out.empty()) out += ", ";
    out += param_name(p) + " -> " + to_string(v);
  }
  return out;
}

ScalingDualityReport scaling_conjugate(const InfOperator& op, int D) {
  if (op.family() != Family::TrigA) throw std::invalid_argument("scaling_conjugate expects the trigA operator");
  auto lambdas = nonempty_up_to(2);
  std::vector<SymFun> target;
  for (const auto& l : lambdas) target.push_back(conjugated(op, l));

  // L_{k,p0} = O1 + k O2 + k p0 O3, read off at numeric parameter points.
  auto at = [&](long k, long p0) {
    return images(InfOperator(Family::TrigA, numeric({{Param::k, k}, {Param::p0, p0}})), lambdas);
  };
  auto l00 = at(0, 0), l10 = at(1, 0), l11 = at(1, 1);
  auto y = fit(target, {l00, difference(l10, l00), difference(l11, l10)});
  if (!y || (*y)[0].is_zero() || (*y)[1].is_zero())
    throw DualityFailure("no scalar multiple of a trigA operator matches the conjugated operator in degree <= 2");

  ScalingDualityReport report;
  report.family = Family::TrigA;
  report.degree = D;
  DualityCandidate& f = report.fitted;
  f.c = (*y)[0];
  Frac k_hat = (*y)[1] / (*y)[0];
  f.map = {{Param::k, k_hat}, {Param::p0, (*y)[2] / (*y)[1]}};
  f.verified = verify(op, Family::TrigA, f, D);
  f.involutive = involutive(f.map, {Param::k, Param::p0});

  Frac k = op.param(Param::k);
  DualityCandidate& printed = report.printed;
  printed.c = k;
  printed.map = {{Param::k, k.inverse()}, {Param::p0, op.param(Param::p0) / k}};
  printed.verified = verify(op, Family::TrigA, printed, D);
  printed.involutive = involutive(printed.map, {Param::k, Param::p0});
  return report;
}

ScalingDualityReport scaling_conjugate_bc(const InfOperator& op_in, int D) {
  if (op_in.family() != Family::TrigBC) throw std::invalid_argument("scaling_conjugate_bc expects the trigBC operator");
  const Frac one(1L), two(2L), half(Rational(1, 2));
  Frac k = op_in.param(Param::k), p = op_in.param(Param::p), q = op_in.param(Param::q), h = op_in.param(Param::h);
  InfOperator op = op_in.with(Param::p0, -(h + p * half + q) / k);

  auto lambdas = nonempty_up_to(2);
  std::vector<SymFun> target;
  for (const auto& l : lambdas) target.push_back(conjugated(op, l));

  // L = O1 + k O2 + 2h O3 + (2h - p - 1 - 2k p0) O4 + p0 (1 + 2k + 2h - p) O5
  // with O3 = P, O4 = sum_{a>=2} p_{a-1} d_a and O5 = d_1.
  auto at = [&](Rational k_, Rational h_, Rational p_, Rational p0_) {
    return images(InfOperator(Family::TrigBC, numeric({{Param::k, k_}, {Param::h, h_}, {Param::p, p_}, {Param::p0, p0_}})),
                  lambdas);
  };
  auto o1 = at(0, 0, -1, 0);
  auto o2 = difference(at(1, 0, -1, 0), o1);
  auto o3 = difference(at(0, Rational(1, 2), 0, 0), o1);
  auto l0000 = at(0, 0, 0, 0);
  auto o4 = difference(o1, l0000);
  auto o5 = difference(at(0, 0, 0, 1), l0000);
  auto y = fit(target, {o1, o2, o3, o4, o5});
  if (!y || (*y)[0].is_zero() || (*y)[1].is_zero())
    throw DualityFailure("no scalar multiple of a BC operator matches the conjugated operator in degree <= 2");

  Frac c = (*y)[0];
  Frac k_hat = (*y)[1] / c;
  Frac h_hat = (*y)[2] / (two * c);
  Frac A = (*y)[3] / c;  // 2 h_hat - p_hat - 1 - 2 k_hat p0_hat
  Frac B = (*y)[4] / c;  // p0_hat (1 + 2 k_hat + 2 h_hat - p_hat)
  // Eliminating p_hat: 2 k_hat p0_hat^2 + (2 + 2 k_hat + A) p0_hat - B = 0.
  Frac beta = two + two * k_hat + A;
  Frac disc = beta * beta + Frac(8L) * k_hat * B;
  auto root = sqrt_exact(disc);
  if (!root) throw DualityFailure("the degree <= 2 fit leaves an irrational p0 map: discriminant " + to_string(disc));

  std::vector<DualityCandidate> candidates;
  for (const Frac& r : {*root, -*root}) {
    Frac p0_hat = (-beta + r) / (Frac(4L) * k_hat);
    Frac p_hat = two * h_hat - one - two * k_hat * p0_hat - A;
    Frac q_hat = -(k_hat * p0_hat) - p_hat * half - h_hat;
    DualityCandidate cand;
    cand.c = c;
    cand.map = {{Param::k, k_hat}, {Param::p, p_hat}, {Param::q, q_hat}, {Param::h, h_hat}, {Param::p0, p0_hat}};
    cand.verified = verify(op, Family::TrigBC, cand, D);
    cand.involutive = involutive(cand.map, {Param::k, Param::p, Param::q, Param::h});
    candidates.push_back(std::move(cand));
    if (root->is_zero()) break;
  }

  ScalingDualityReport report;
  report.family = Family::TrigBC;
  report.degree = D;
  Frac scaled_p0 = k * op.param(Param::p0);
  std::size_t chosen = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i].map.at(Param::p0) == scaled_p0) chosen = i;
  report.fitted = candidates[chosen];
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (i != chosen) report.alternatives.push_back(candidates[i]);

  const Bindings& m = report.fitted.map;
  report.matches_printed_relations = m.at(Param::p) == p / k &&
                                     two * m.at(Param::q) + one == (two * q + one) / k &&
                                     two * m.at(Param::h) - one == (two * h - one) / k;
  return report;
}

}  // namespace cmsym
