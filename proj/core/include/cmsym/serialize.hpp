#pragma once

#include <string>
#include <string_view>

#include "cmsym/eigensolver.hpp"
#include "cmsym/verify.hpp"

namespace cmsym {

/// {"label", "family", "eigenvalue", "expansion": [{"partition", "coefficient"}]}
/// with partitions as "2,1" and coefficients as expression strings.
std::string to_json(const EigenResult& r);
/// Inverse of to_json; throws ParseError.
EigenResult eigen_result_from_json(std::string_view text);

/// {"label", "m", "n", "parameters": {name: value}, "value"}.
std::string to_json(const SuperJacobi& s);
SuperJacobi super_jacobi_from_json(std::string_view text);

/// {"suite", "cases": [{"id", "status", "detail"}], "summary"}.
std::string to_json(const Report& r);
Report report_from_json(std::string_view text);

/// Plain-text renderings used by the CLI.
std::string to_text(const EigenResult& r);
std::string to_text(const SuperJacobi& s);
std::string to_text(const Report& r);

}  // namespace cmsym
