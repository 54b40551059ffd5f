#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmsym/eigensolver.hpp"
#include "cmsym/errors.hpp"
#include "cmsym/serialize.hpp"
#include "cmsym/verify.hpp"

namespace {

using namespace cmsym;

enum ExitCode { kOk = 0, kFailed = 1, kResonance = 2, kConfig = 3, kPole = 4 };

struct Options {
  std::string partition = "-";
  std::string suite;
  int m = 1;
  int n = 0;
  std::optional<int> N;
  int max_degree = 4;
  std::vector<std::string> binds;
  std::string euler;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool m_given = false;
  bool n_given = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// NAME=RAT pairs; "symbolic" leaves the parameter free.
Bindings parse_bindings(const std::vector<std::string>& binds, const std::set<Param>& allowed) {
  Bindings out;
  for (const auto& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw ConfigError("binding '" + b + "' is not NAME=VALUE");
    std::string name = b.substr(0, eq), value = b.substr(eq + 1);
    auto p = param_from_name(name);
    if (!p || !allowed.count(*p)) throw ConfigError("unknown parameter '" + name + "'");
    if (value == "symbolic") {
      out.erase(*p);
      continue;
    }
    Frac v;
    try {
      v = parse_frac(value);
    } catch (const ParseError& e) {
      throw ConfigError("binding '" + b + "': " + e.what());
    }
    if (!v.is_constant()) throw ConfigError("binding '" + b + "' is not a rational number");
    out[*p] = v;
  }
  return out;
}

Partition partition_arg(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("partition '") + text + "': " + e.what());
  }
}

bool json(const Options& o) { return o.format == "json"; }

int cmd_eigen(const Options& o, Family family) {
  std::set<Param> allowed = family == Family::TrigA ? std::set<Param>{Param::k, Param::p0}
                                                    : std::set<Param>{Param::k, Param::p, Param::q, Param::h, Param::p0};
  Bindings b = parse_bindings(o.binds, allowed);
  Partition lambda = partition_arg(o.partition);
  InfOperator op(family, b);
  EigenResult r = family == Family::TrigA ? jack(lambda, op) : jacobi(lambda, op);
  std::cout << (json(o) ? to_json(r) : to_text(r));
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.max_degree = o.max_degree;
  cfg.N = o.N;
  if (o.m_given) cfg.m = o.m;
  if (o.n_given) cfg.n = o.n;
  cfg.bindings = parse_bindings(o.binds, {Param::k, Param::p, Param::q, Param::h, Param::p0, Param::l});
  cfg.seed = o.seed;
  Report r;
  try {
    r = run_suite(o.suite, cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::cout << (json(o) ? to_json(r) : to_text(r));
  return r.passed() ? kOk : kFailed;
}

int cmd_superjacobi(const Options& o) {
  Partition lambda = partition_arg(o.partition);
  if (o.m < 0 || o.n < 0 || o.m + o.n == 0) throw ConfigError("need m, n >= 0 with m + n > 0");
  SuperJacobi out;
  if (!o.euler.empty()) {
    if (!o.binds.empty()) throw ConfigError("--euler fixes k, p, q; drop --bind");
    EulerVariant v = o.euler == "odd" ? EulerVariant::Odd : EulerVariant::Even;
    out.label = lambda;
    out.m = o.m;
    out.n = o.n;
    out.parameters = {{Param::k, Frac(-1L)}, {Param::p, Frac(v == EulerVariant::Odd ? -1L : 0L)}, {Param::q, Frac(0L)}};
    out.value = specialize_euler(lambda, o.m, o.n, v);
  } else {
    Bindings b = parse_bindings(o.binds, {Param::k, Param::p, Param::q});
    DeformedContext ctx(o.m, o.n);
    if (b.count(Param::k)) ctx.k = b.at(Param::k);
    if (b.count(Param::p)) ctx.p = b.at(Param::p);
    if (b.count(Param::q)) ctx.q = b.at(Param::q);
    out = super_jacobi(lambda, ctx);
  }
  std::cout << (json(o) ? to_json(out) : to_text(out));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Calogero-Moser-Sutherland operators on symmetric functions"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--bind", o.binds, "Parameter binding NAME=RATIONAL or NAME=symbolic (repeatable)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  };
  auto partition = [&](CLI::App* sub) {
    sub->add_option("--partition", o.partition, "Partition label such as 2,1; '-' is the empty partition")
        ->capture_default_str();
  };

  auto* jack_cmd = app.add_subcommand("jack", "Jack symmetric function from the trigA operator");
  partition(jack_cmd);
  common(jack_cmd);

  auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi symmetric function from the trigBC operator");
  partition(jacobi_cmd);
  common(jacobi_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-degree", o.max_degree, "Largest partition weight checked")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--N", o.N, "Number of variables of the finite model");
  auto* vm = verify_cmd->add_option("--m", o.m, "Number of u coordinates");
  auto* vn = verify_cmd->add_option("--n", o.n, "Number of v coordinates");
  verify_cmd->add_option("--seed", o.seed, "Seed for random rational samples")->capture_default_str();
  common(verify_cmd);

  auto* sj_cmd = app.add_subcommand("superjacobi", "Super Jacobi polynomial in (u, v)");
  partition(sj_cmd);
  sj_cmd->add_option("--m", o.m, "Number of u coordinates")->capture_default_str();
  sj_cmd->add_option("--n", o.n, "Number of v coordinates")->capture_default_str();
  sj_cmd->add_option("--euler", o.euler, "Specialise at k=-1, q=0 and p=-1 (odd) or p=0 (even)")
      ->check(CLI::IsMember({"odd", "even"}));
  common(sj_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }
  o.m_given = vm->count() > 0;
  o.n_given = vn->count() > 0;

  try {
    if (*jack_cmd) return cmd_eigen(o, Family::TrigA);
    if (*jacobi_cmd) return cmd_eigen(o, Family::TrigBC);
    if (*verify_cmd) return cmd_verify(o);
    if (*sj_cmd) return cmd_superjacobi(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const ResonanceError& e) {
    std::cerr << "resonance: " << e.what() << "\n";
    return kResonance;
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return kPole;
  }
  return kConfig;
}
