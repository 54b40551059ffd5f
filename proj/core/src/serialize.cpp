#include "cmsym/serialize.hpp"

#include <json.hpp>

#include "cmsym/errors.hpp"

namespace cmsym {

using nlohmann::ordered_json;

namespace {

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename F>
auto field(const ordered_json& j, const char* key, F&& read) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return read(j.at(key));
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::string str(const ordered_json& j) { return j.get<std::string>(); }

Family family_field(const ordered_json& j) {
  auto f = family_from_name(field(j, "family", str));
  if (!f) throw ParseError("unknown family");
  return *f;
}

std::string with_newline(const std::string& body) { return body + "\n"; }

}  // namespace

std::string to_json(const EigenResult& r) {
  ordered_json j;
  j["label"] = to_string(r.label);
  j["family"] = family_name(r.family);
  j["eigenvalue"] = to_string(r.eigenvalue);
  ordered_json terms = ordered_json::array();
  for (auto it = r.expansion.coeffs.rbegin(); it != r.expansion.coeffs.rend(); ++it)
    terms.push_back({{"partition", to_string(it->first)}, {"coefficient", to_string(it->second)}});
  j["expansion"] = std::move(terms);
  return with_newline(j.dump(2));
}

EigenResult eigen_result_from_json(std::string_view text) {
  ordered_json j = parse(text);
  EigenResult r;
  r.label = parse_partition(field(j, "label", str));
  r.family = family_field(j);
  r.eigenvalue = parse_frac(field(j, "eigenvalue", str));
  r.expansion.degree = r.label.weight();
  for (const auto& t : field(j, "expansion", [](const ordered_json& v) { return v; })) {
    Partition mu = parse_partition(field(t, "partition", str));
    r.expansion.coeffs[mu] = parse_frac(field(t, "coefficient", str));
  }
  return r;
}

std::string to_json(const SuperJacobi& s) {
  ordered_json j;
  j["label"] = to_string(s.label);
  j["m"] = s.m;
  j["n"] = s.n;
  ordered_json params = ordered_json::object();
  for (const auto& [p, v] : s.parameters) params[param_name(p)] = to_string(v);
  j["parameters"] = std::move(params);
  j["value"] = to_string(s.value);
  return with_newline(j.dump(2));
}

SuperJacobi super_jacobi_from_json(std::string_view text) {
  ordered_json j = parse(text);
  SuperJacobi s;
  s.label = parse_partition(field(j, "label", str));
  s.m = field(j, "m", [](const ordered_json& v) { return v.get<int>(); });
  s.n = field(j, "n", [](const ordered_json& v) { return v.get<int>(); });
  const ordered_json params = field(j, "parameters", [](const ordered_json& v) { return v; });
  if (!params.is_object()) throw ParseError("bad field 'parameters': expected an object");
  for (const auto& [name, v] : params.items()) {
    auto p = param_from_name(name);
    if (!p) throw ParseError("unknown parameter '" + name + "'");
    s.parameters.emplace(*p, parse_frac(v.get<std::string>()));
  }
  s.value = parse_mpoly(field(j, "value", str), VarLayout::uv(s.m, s.n));
  return s;
}

std::string to_json(const Report& r) {
  ordered_json j;
  j["suite"] = r.suite;
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) cases.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["cases"] = std::move(cases);
  j["summary"] = r.summary();
  return with_newline(j.dump(2));
}

Report report_from_json(std::string_view text) {
  ordered_json j = parse(text);
  Report r;
  r.suite = field(j, "suite", str);
  for (const auto& c : field(j, "cases", [](const ordered_json& v) { return v; })) {
    CaseResult cr;
    cr.id = field(c, "id", str);
    std::string status = field(c, "status", str);
    if (status == "pass") cr.status = CaseStatus::Pass;
    else if (status == "fail") cr.status = CaseStatus::Fail;
    else if (status == "info") cr.status = CaseStatus::Info;
    else throw ParseError("unknown status '" + status + "'");
    cr.detail = field(c, "detail", str);
    r.cases.push_back(std::move(cr));
  }
  return r;
}

std::string to_text(const EigenResult& r) {
  std::string out = family_name(r.family) + " eigenfunction " + to_string(r.label) + "\n";
  out += "eigenvalue: " + to_string(r.eigenvalue) + "\n";
  for (auto it = r.expansion.coeffs.rbegin(); it != r.expansion.coeffs.rend(); ++it)
    out += "  m_" + to_string(it->first) + ": " + to_string(it->second) + "\n";
  return out;
}

std::string to_text(const SuperJacobi& s) { return to_string(s.value) + "\n"; }

std::string to_text(const Report& r) {
  std::string out;
  for (const auto& c : r.cases) {
    out += status_name(c.status) + "  " + c.id;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  out += r.suite + ": " + r.summary() + "\n";
  return out;
}

}  // namespace cmsym
