// Acceptance gate: one line per criterion, exact equality throughout.
// Usage: cmsym_acceptance [criterion...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "cmsym/eigensolver.hpp"
#include "cmsym/errors.hpp"
#include "cmsym/verify.hpp"

using namespace cmsym;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string first_failure(const Report& r) {
  for (const auto& c : r.cases)
    if (c.status == CaseStatus::Fail) return r.suite + ": " + c.id + " (" + c.detail + ")";
  return r.suite + ": " + r.summary();
}

Outcome all_pass(const std::vector<Report>& reports) {
  Outcome out{true, {}};
  for (const auto& r : reports) {
    if (!r.passed()) return {false, first_failure(r)};
    out.detail += (out.detail.empty() ? "" : "; ") + r.suite + " " + r.summary();
  }
  return out;
}

VerifyConfig degree(int d) {
  VerifyConfig c;
  c.max_degree = d;
  return c;
}

Outcome diagram_trig_a() { return all_pass({run_suite("diagram-trigA", degree(6))}); }

Outcome diagram_rational() { return all_pass({run_suite("diagram-ratA", degree(5)), run_suite("diagram-ratB", degree(5))}); }

Outcome theorem_one() {
  VerifyConfig cfg = degree(4);
  cfg.samples = 3;
  Outcome out = all_pass({run_suite("diagram-bc", cfg), run_suite("theorem1", cfg)});
  if (!out.ok) return out;

  // Negative control: a generic h breaks every sampled diagram.
  VerifyConfig neg = degree(3);
  neg.m = 1;
  neg.n = 1;
  neg.bindings[Param::h] = Frac(0L);
  Report r = run_suite("theorem1", neg);
  std::size_t diagrams = 0, failed = 0;
  for (const auto& c : r.cases)
    if (c.id.rfind("diagram", 0) == 0) {
      ++diagrams;
      if (c.status == CaseStatus::Fail) ++failed;
    }
  if (diagrams == 0 || failed != diagrams)
    return {false, "negative control with h=0: " + std::to_string(failed) + "/" + std::to_string(diagrams) + " diagram cases fail"};
  out.detail += "; negative control h=0 fails " + std::to_string(failed) + "/" + std::to_string(diagrams);
  return out;
}

Outcome duality_a() {
  Report r = run_suite("duality-A", degree(6));
  return {r.passed(), r.cases.empty() ? "no cases" : r.cases.front().detail};
}

Outcome duality_bc() {
  Report r = run_suite("duality-BC", degree(4));
  return {r.passed(), r.cases.empty() ? "no cases" : r.cases.front().detail};
}

Outcome fourier_swap() {
  Report r = run_suite("fourier", degree(4));
  return {r.passed(), r.cases.empty() ? "no cases" : r.cases.front().detail};
}

Outcome triangularity() { return all_pass({run_suite("triangularity", degree(8))}); }

Outcome eigenfunctions() {
  VerifyConfig jack_cfg = degree(6);
  jack_cfg.samples = 1;
  Report jacks = run_suite("eigen", jack_cfg);
  Report only_jack;
  only_jack.suite = "eigen (jack)";
  for (const auto& c : jacks.cases)
    if (c.id.rfind("jack", 0) == 0) only_jack.cases.push_back(c);
  VerifyConfig jacobi_cfg = degree(4);
  jacobi_cfg.samples = 3;
  Report jacobis = run_suite("eigen", jacobi_cfg);
  jacobis.suite = "eigen (jacobi)";
  return all_pass({only_jack, jacobis});
}

Outcome super_jacobi_pipeline() {
  std::size_t runs = 0;
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
    DeformedContext ctx(m, n);
    for (const auto& l : partitions_up_to(3)) {
      SuperJacobi sj = super_jacobi(l, ctx);
      if (!is_in_deformed_algebra(sj.value, ctx))
        return {false, "super_jacobi(" + to_string(l) + ") at (" + std::to_string(m) + "," + std::to_string(n) + ") is not in the deformed algebra"};
      for (auto v : {EulerVariant::Odd, EulerVariant::Even}) {
        try {
          specialize_euler(l, m, n, v);
        } catch (const PoleError& e) {
          return {false, std::string("pole: ") + e.what()};
        }
        ++runs;
      }
    }
  }
  return {true, std::to_string(runs) + " specialisations pole-free, all memberships hold"};
}

Outcome momentum_commutes() {
  bool ok = commutator_vanishes(InfOperator(Family::TrigA), 5);
  return {ok, ok ? "[L, P] = 0 on p_lambda, |lambda| <= 5" : "commutator nonzero"};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "trigA diagram, |lambda| <= 6, N <= 5", diagram_trig_a},
      {2, "ratA/ratB diagrams, |lambda| <= 5, N <= 4, gauge remainder N <= 3", diagram_rational},
      {3, "BC diagram and deformed diagram, kernel preservation, negative control", theorem_one},
      {4, "trigA scaling duality", duality_a},
      {5, "BC scaling duality relations", duality_bc},
      {6, "Fourier swap of the quadratic blocks", fourier_swap},
      {7, "triangularity of trigA and trigBC, d <= 8", triangularity},
      {8, "Jack |lambda| <= 6 and Jacobi |lambda| <= 4 eigenfunctions", eigenfunctions},
      {9, "super Jacobi pipeline and Euler specialisations", super_jacobi_pipeline},
      {10, "momentum commutes with the trigA operator", momentum_commutes},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    char time[32];
    std::snprintf(time, sizeof time, "%.1fs", secs);
    std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << time << "]  "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
