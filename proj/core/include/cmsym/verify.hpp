#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cmsym/frac.hpp"

namespace cmsym {

enum class CaseStatus { Pass, Fail, Info };

std::string status_name(CaseStatus s);

struct CaseResult {
  std::string id;
  CaseStatus status = CaseStatus::Fail;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t count(CaseStatus s) const;
  bool passed() const { return count(CaseStatus::Fail) == 0; }
  std::string summary() const;
};

struct VerifyConfig {
  int max_degree = 4;
  std::optional<int> N;
  std::optional<int> m;
  std::optional<int> n;
  /// Fixed parameter values; everything else is symbolic or sampled.
  Bindings bindings;
  std::uint64_t seed = 0;
  /// Random rational parameter samples per numeric case.
  int samples = 3;
};

/// Suite names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs every case of a suite. Cases are evaluated in parallel; the report
/// lists them in case order. Throws std::invalid_argument on an unknown suite.
Report run_suite(const std::string& suite, const VerifyConfig& config);

/// Rationals a/b with a in [-20, 20] and b in [1, 20].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, std::uint64_t stream = 0);
  Rational next();
  /// Nonzero sample.
  Rational next_nonzero();

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kMaxSampleRetries = 100;

}  // namespace cmsym
