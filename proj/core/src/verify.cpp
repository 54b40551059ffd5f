#include "cmsym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cmsym/duality.hpp"
#include "cmsym/eigensolver.hpp"
#include "cmsym/errors.hpp"
#include "cmsym/finite_models.hpp"
#include "cmsym/gauge.hpp"
#include "cmsym/normal_symbol.hpp"

namespace cmsym {

std::string status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Info: return "info";
  }
  return "fail";
}

std::size_t Report::count(CaseStatus s) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.status == s; }));
}

std::string Report::summary() const {
  std::ostringstream out;
  out << count(CaseStatus::Pass) << " passed, " << count(CaseStatus::Fail) << " failed";
  if (auto info = count(CaseStatus::Info)) out << ", " << info << " informational";
  return out.str();
}

RationalSampler::RationalSampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

Rational RationalSampler::next() {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  long a = num(rng_);
  long b = den(rng_);
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Rational RationalSampler::next_nonzero() {
  for (int i = 0; i < kMaxSampleRetries; ++i) {
    Rational r = next();
    if (r != 0) return r;
  }
  throw std::runtime_error("no nonzero rational sample after the retry limit");
}

namespace {

using Check = std::function<CaseResult()>;

struct Case {
  std::string id;
  Check run;
};

CaseResult verdict(bool ok, std::string detail = {}) {
  return CaseResult{{}, ok ? CaseStatus::Pass : CaseStatus::Fail, std::move(detail)};
}

Frac bound(const VerifyConfig& cfg, Param p) {
  auto it = cfg.bindings.find(p);
  return it == cfg.bindings.end() ? Frac::param(p) : it->second;
}

Bindings only(const VerifyConfig& cfg, std::initializer_list<Param> params) {
  Bindings out;
  for (Param p : params)
    if (auto it = cfg.bindings.find(p); it != cfg.bindings.end()) out.emplace(p, it->second);
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

// Partitions of weight 1..d.
std::vector<Partition> labels(int d) {
  std::vector<Partition> out;
  for (const auto& l : partitions_up_to(d))
    if (!l.empty()) out.push_back(l);
  std::reverse(out.begin(), out.end());
  return out;
}

CaseResult mismatches(const std::vector<Partition>& all, const std::function<bool(const Partition&)>& holds) {
  std::vector<std::string> bad;
  for (const auto& l : all)
    if (!holds(l)) bad.push_back("[" + to_string(l) + "]");
  if (bad.empty()) return verdict(true, std::to_string(all.size()) + " partitions");
  return verdict(false, "fails on " + join(bad, " "));
}

std::vector<int> range_or(const std::optional<int>& given, int lo, int hi) {
  if (given) return {*given};
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> theorem_pairs(const VerifyConfig& cfg) {
  if (cfg.m || cfg.n) return {{cfg.m.value_or(1), cfg.n.value_or(0)}};
  return {{1, 0}, {2, 0}, {1, 1}, {2, 1}, {1, 2}};
}

void require_degree(const VerifyConfig& cfg) {
  if (cfg.max_degree < 0) throw std::invalid_argument("max-degree must be non-negative");
}

// ---- finite diagrams ------------------------------------------------------

MPoly apply_finite(Family family, const MPoly& f, int N, const VerifyConfig& cfg) {
  Frac k = bound(cfg, Param::k);
  switch (family) {
    case Family::TrigA: return apply_cms_trig_A(f, N, k);
    case Family::RatA: return apply_gauged_rational_A(f, N, k);
    case Family::RatB: return apply_gauged_rational_B(f, N, k, bound(cfg, Param::l));
    case Family::TrigBC: return apply_gauged_bc_trig(f, N, k, bound(cfg, Param::p), bound(cfg, Param::q));
  }
  return {};
}

std::vector<Case> diagram_cases(Family family, const VerifyConfig& cfg, int max_N) {
  std::vector<Case> cases;
  std::string name = family_name(family);
  InfOperator op(family, only(cfg, {Param::k, Param::l}));
  for (int N : range_or(cfg.N, 1, max_N)) {
    cases.push_back({"diagram " + name + " N=" + std::to_string(N), [=] {
                       return mismatches(labels(cfg.max_degree), [&](const Partition& l) {
                         SymFun p = SymFun::monomial(l);
                         return apply_finite(family, phi_N(p, N), N, cfg) == phi_N(apply_inf(op, p), N);
                       });
                     }});
  }
  for (int N : range_or(cfg.N, 1, 3)) {
    if (N > 3) continue;
    Bindings params = only(cfg, {Param::k, Param::l});
    cases.push_back({"gauge remainder " + name + " N=" + std::to_string(N), [=] {
                       GaugeCheck g = gauge_remainder(family, N, params);
                       return verdict(g.constant, g.constant ? "remainder " + to_string(g.remainder) : "remainder depends on the coordinates");
                     }});
    cases.push_back({"gauged operator " + name + " N=" + std::to_string(N), [=] {
                       return mismatches(labels(std::min(cfg.max_degree, 3)), [&](const Partition& l) {
                         return gauge_matches_operator(family, N, phi_N(SymFun::monomial(l), N), params);
                       });
                     }});
  }
  return cases;
}

std::vector<Case> diagram_bc_cases(const VerifyConfig& cfg) {
  std::vector<Case> cases;
  for (int m : range_or(cfg.m ? cfg.m : cfg.N, 1, 3)) {
    DeformedContext ctx(m, 0, bound(cfg, Param::k), bound(cfg, Param::p), bound(cfg, Param::q));
    Frac h = cfg.bindings.count(Param::h) ? cfg.bindings.at(Param::h) : ctx.theorem_h();
    InfOperator op(Family::TrigBC, {{Param::k, ctx.k}, {Param::p, ctx.p}, {Param::q, ctx.q}, {Param::h, h}});
    cases.push_back({"diagram trigBC N=" + std::to_string(m), [=] {
                       return mismatches(labels(cfg.max_degree), [&](const Partition& l) {
                         SymFun p = SymFun::monomial(l);
                         return apply_gauged_bc_trig(phi_mn(p, ctx), m, ctx.k, ctx.p, ctx.q) == phi_mn(apply_inf(op, p), ctx);
                       });
                     }});
    if (m <= 2) {
      Bindings params = only(cfg, {Param::k, Param::p, Param::q});
      cases.push_back({"gauge remainder trigBC N=" + std::to_string(m), [=] {
                         GaugeCheck g = gauge_remainder(Family::TrigBC, m, params);
                         return verdict(g.constant, g.constant ? "remainder " + to_string(g.remainder) : "remainder depends on the coordinates");
                       }});
    }
  }
  return cases;
}

// ---- deformed restriction ------------------------------------------------

InfOperator theorem_operator(const DeformedContext& ctx, const VerifyConfig& cfg) {
  Frac h = cfg.bindings.count(Param::h) ? cfg.bindings.at(Param::h) : ctx.theorem_h();
  return InfOperator(Family::TrigBC, {{Param::k, ctx.k}, {Param::p, ctx.p}, {Param::q, ctx.q}, {Param::h, h}});
}

MPoly apply_deformed(const MPoly& f, const DeformedContext& ctx) {
  return ctx.n == 0 ? apply_gauged_bc_trig(f, ctx.m, ctx.k, ctx.p, ctx.q) : apply_gauged_deformed_bc(f, ctx);
}

std::string describe_context(const DeformedContext& ctx) {
  return "k=" + to_string(ctx.k) + " p=" + to_string(ctx.p) + " q=" + to_string(ctx.q);
}

CaseResult kernel_preserved(const DeformedContext& ctx, const VerifyConfig& cfg) {
  InfOperator op = theorem_operator(ctx, cfg);
  auto kernel = kernel_basis(Restriction::deformed(ctx), cfg.max_degree);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    if (!phi_mn(apply_inf(op, kernel[i]), ctx).is_zero())
      return verdict(false, "L maps kernel element " + std::to_string(i + 1) + " outside the kernel");
  return verdict(true, "kernel dimension " + std::to_string(kernel.size()) + " through degree " + std::to_string(cfg.max_degree));
}

std::vector<Case> theorem1_cases(const VerifyConfig& cfg) {
  std::vector<Case> cases;
  std::uint64_t stream = 0;
  for (auto [m, n] : theorem_pairs(cfg)) {
    if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("theorem1 needs m, n >= 0 with m + n > 0");
    std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    for (int s = 0; s < cfg.samples; ++s) {
      RationalSampler rng(cfg.seed, ++stream);
      Frac k = cfg.bindings.count(Param::k) ? cfg.bindings.at(Param::k) : Frac(rng.next_nonzero());
      Frac p = cfg.bindings.count(Param::p) ? cfg.bindings.at(Param::p) : Frac(rng.next());
      Frac q = cfg.bindings.count(Param::q) ? cfg.bindings.at(Param::q) : Frac(rng.next());
      DeformedContext ctx(m, n, k, p, q);
      cases.push_back({"diagram " + tag + " sample " + std::to_string(s + 1), [=] {
                         InfOperator op = theorem_operator(ctx, cfg);
                         CaseResult r = mismatches(labels(cfg.max_degree), [&](const Partition& l) {
                           SymFun f = SymFun::monomial(l);
                           return apply_deformed(phi_mn(f, ctx), ctx) == phi_mn(apply_inf(op, f), ctx);
                         });
                         r.detail = describe_context(ctx) + ": " + r.detail;
                         return r;
                       }});
      if (s == 0 && n > 0)
        cases.push_back({"gauge remainder " + tag, [=] {
                           GaugeCheck g = gauge_remainder(ctx);
                           return verdict(g.constant, describe_context(ctx) + (g.constant ? ": constant" : ": not constant"));
                         }});
    }
    DeformedContext symbolic(m, n, bound(cfg, Param::k), bound(cfg, Param::p), bound(cfg, Param::q));
    cases.push_back({"kernel preservation " + tag, [=] { return kernel_preserved(symbolic, cfg); }});
  }
  return cases;
}

std::vector<Case> kernel_cases(const VerifyConfig& cfg) {
  std::vector<Case> cases;
  for (auto [m, n] : theorem_pairs(cfg)) {
    DeformedContext ctx(m, n, bound(cfg, Param::k), bound(cfg, Param::p), bound(cfg, Param::q));
    std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    cases.push_back({"kernel preservation " + tag, [=] { return kernel_preserved(ctx, cfg); }});
    cases.push_back({"kernel membership " + tag, [=] {
                       for (const auto& l : labels(cfg.max_degree))
                         if (!is_in_deformed_algebra(phi_mn(SymFun::monomial(l), ctx), ctx))
                           return verdict(false, "phi(p_" + to_string(l) + ") fails the hyperplane condition");
                       return verdict(true);
                     }});
  }
  return cases;
}

// ---- dualities and the Fourier swap ---------------------------------------

std::string candidate_detail(const DualityCandidate& c) {
  return "c = " + to_string(c.c) + "; " + describe(c.map) + "; verified " + (c.verified ? "yes" : "no") + ", involutive " +
         (c.involutive ? "yes" : "no");
}

std::vector<Case> duality_a_cases(const VerifyConfig& cfg) {
  return {{"duality trigA", [=] {
             auto r = scaling_conjugate(InfOperator(Family::TrigA, only(cfg, {Param::k, Param::p0})), cfg.max_degree);
             Frac k = bound(cfg, Param::k);
             bool ok = r.fitted.verified && r.fitted.involutive && r.fitted.c == k && r.fitted.map.at(Param::k) == k.inverse();
             return verdict(ok, "fitted: " + candidate_detail(r.fitted) + "; printed map: " + candidate_detail(r.printed));
           }}};
}

std::vector<Case> duality_bc_cases(const VerifyConfig& cfg) {
  return {{"duality trigBC", [=] {
             auto r = scaling_conjugate_bc(InfOperator(Family::TrigBC, only(cfg, {Param::k, Param::p, Param::q, Param::h})),
                                           cfg.max_degree);
             bool ok = r.fitted.verified && r.fitted.involutive && r.matches_printed_relations;
             std::string detail = "fitted: " + candidate_detail(r.fitted) + "; printed relations " +
                                  (r.matches_printed_relations ? "reproduced" : "not reproduced");
             for (const auto& alt : r.alternatives) detail += "; alternative: " + candidate_detail(alt);
             return verdict(ok, detail);
           }}};
}

std::vector<Case> fourier_cases(const VerifyConfig& cfg) {
  return {{"fourier swap", [=] {
             auto r = fourier_swap_check(InfOperator(Family::TrigA, only(cfg, {Param::k, Param::p0})), cfg.max_degree);
             std::string constants;
             for (const auto& [a, c] : r.reordering_constants)
               constants += (constants.empty() ? "" : ", ") + std::string("a=") + std::to_string(a) + ": " + to_string(c);
             bool ok = r.quadratic_blocks_exchange() && r.diagonal_block_preserved;
             return verdict(ok, std::string("two-derivative -> two-p ") + (r.two_derivative_block_maps_to_two_p_block ? "yes" : "no") +
                                    ", two-p -> two-derivative " + (r.two_p_block_maps_to_two_derivative_block ? "yes" : "no") +
                                    ", diagonal preserved " + (r.diagonal_block_preserved ? "yes" : "no") +
                                    "; reordering constants " + constants);
           }}};
}

// ---- triangularity and eigenfunctions -------------------------------------

bool allowed_below(Family family, const Partition& col, const Partition& row) {
  if (col == row) return true;
  if (col.weight() != row.weight()) return family == Family::TrigBC && col.weight() < row.weight();
  return dominated_by(col, row);
}

CaseResult triangular(Family family, int d, const VerifyConfig& cfg) {
  InfOperator op(family, only(cfg, {Param::k, Param::p0, Param::p, Param::q, Param::h}));
  auto basis = matrix_basis(family, d);
  auto a = operator_matrix(op, d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!a[i][j].is_zero() && !allowed_below(family, basis[j], basis[i]))
        return verdict(false, "m_" + to_string(basis[i]) + " reaches m_" + to_string(basis[j]));
  return verdict(true, std::to_string(basis.size()) + " basis elements");
}

std::vector<Case> triangularity_cases(const VerifyConfig& cfg) {
  std::vector<Case> cases;
  for (int d = 1; d <= cfg.max_degree; ++d)
    cases.push_back({"triangular trigA d=" + std::to_string(d), [=] { return triangular(Family::TrigA, d, cfg); }});
  for (int d = 1; d <= cfg.max_degree; ++d)
    cases.push_back({"triangular trigBC d=" + std::to_string(d), [=] { return triangular(Family::TrigBC, d, cfg); }});
  return cases;
}

Frac expected(const Frac& symbolic, const VerifyConfig& cfg) { return substitute(symbolic, cfg.bindings); }

std::vector<Case> eigen_cases(const VerifyConfig& cfg) {
  std::vector<Case> cases;
  InfOperator trig_a(Family::TrigA, only(cfg, {Param::k, Param::p0}));
  for (int d = 1; d <= cfg.max_degree; ++d)
    cases.push_back({"jack d=" + std::to_string(d), [=] {
                       return mismatches(partitions_of(d), [&](const Partition& l) { return verify_eigen(trig_a, jack(l, trig_a)); });
                     }});
  cases.push_back({"jack examples", [=] {
                     Frac k = Frac::param(Param::k), p0 = Frac::param(Param::p0), one(1L), two(2L);
                     auto j2 = jack({2}, trig_a);
                     bool ok = j2.expansion.coefficient({1, 1}) == expected(two * k / (k - one), cfg) &&
                               j2.eigenvalue == expected(Frac(4L) + two * k - two * k * p0, cfg) &&
                               jack({1}, trig_a).eigenvalue == expected(one + k - k * p0, cfg) &&
                               jack({1, 1}, trig_a).eigenvalue == expected(two + Frac(4L) * k - two * k * p0, cfg);
                     return verdict(ok, "jack(2) coefficient of m_1,1: " + to_string(j2.expansion.coefficient({1, 1})));
                   }});
  std::uint64_t stream = 1000;
  for (int s = 0; s < cfg.samples; ++s) {
    std::uint64_t id = ++stream;
    cases.push_back({"jacobi sample " + std::to_string(s + 1), [=] {
                       RationalSampler rng(cfg.seed, id);
                       for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
                         Bindings b = only(cfg, {Param::k, Param::p, Param::q, Param::h, Param::p0});
                         for (Param p : {Param::k, Param::p, Param::q, Param::h})
                           if (!b.count(p)) b.emplace(p, Frac(rng.next()));
                         InfOperator op(Family::TrigBC, b);
                         try {
                           std::vector<EigenResult> results;
                           for (const auto& l : partitions_up_to(cfg.max_degree)) results.push_back(jacobi(l, op));
                           CaseResult r = mismatches(partitions_up_to(cfg.max_degree), [&](const Partition& l) {
                             for (const auto& e : results)
                               if (e.label == l) return verify_eigen(op, e);
                             return false;
                           });
                           r.detail = describe(b) + ": " + r.detail;
                           return r;
                         } catch (const ResonanceError&) {
                           if (cfg.bindings.count(Param::k) && cfg.bindings.count(Param::p) && cfg.bindings.count(Param::q) &&
                               cfg.bindings.count(Param::h))
                             throw;
                         }
                       }
                       return verdict(false, "every sample hit a resonance");
                     }});
  }
  return cases;
}

// ---- dispatch -------------------------------------------------------------

std::vector<Case> build_cases(const std::string& suite, const VerifyConfig& cfg) {
  if (suite == "diagram-trigA") return diagram_cases(Family::TrigA, cfg, 5);
  if (suite == "diagram-ratA") return diagram_cases(Family::RatA, cfg, 4);
  if (suite == "diagram-ratB") return diagram_cases(Family::RatB, cfg, 4);
  if (suite == "diagram-bc") return diagram_bc_cases(cfg);
  if (suite == "theorem1") return theorem1_cases(cfg);
  if (suite == "kernel") return kernel_cases(cfg);
  if (suite == "duality-A") return duality_a_cases(cfg);
  if (suite == "duality-BC") return duality_bc_cases(cfg);
  if (suite == "fourier") return fourier_cases(cfg);
  if (suite == "triangularity") return triangularity_cases(cfg);
  if (suite == "eigen") return eigen_cases(cfg);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"diagram-trigA", "diagram-ratA", "diagram-ratB", "diagram-bc",
                                              "theorem1",      "kernel",       "duality-A",    "duality-BC",
                                              "fourier",       "triangularity", "eigen"};
  return names;
}

Report run_suite(const std::string& suite, const VerifyConfig& config) {
  require_degree(config);
  if (config.samples < 1) throw std::invalid_argument("samples must be positive");
  std::vector<Case> cases = build_cases(suite, config);
  Report report;
  report.suite = suite;
  report.cases.resize(cases.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      CaseResult r;
      try {
        r = cases[i].run();
      } catch (const std::exception& e) {
        r = CaseResult{{}, CaseStatus::Fail, std::string("error: ") + e.what()};
      }
      r.id = cases[i].id;
      report.cases[i] = std::move(r);
    }
  };
  std::size_t threads = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), cases.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace cmsym
