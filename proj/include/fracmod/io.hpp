#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV serialisation of grid functions, profiles, psi
 * tables and bound reports. Non-finite numbers are written as the strings
 * "inf", "-inf" and "nan" in JSON and as bare words in CSV.
 */

#include <filesystem>
#include <string>
#include <vector>

#include "fracmod/gls.hpp"
#include "fracmod/grid.hpp"
#include "fracmod/harness.hpp"
#include "fracmod/modulus.hpp"
#include "json.hpp"

namespace fracmod::io {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json number(double v);
double to_number(const Json& j);

/// Writes through a sibling temp file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

std::string format_double(double v);

Json to_json(const GridFunction& f);
GridFunction grid_function_from_json(const Json& j);
/// "x,value" rows.
std::string to_csv(const GridFunction& f);
/// "x,value" or "x,y,value" rows.
std::string to_csv(const GridFunctionND& f);

std::string to_csv(const ModulusProfile& profile);
Json to_json(const ModulusProfile& profile);

/// Tabulated and degenerate psi only; an infinite B is written as null.
Json to_json(const PsiFunction& psi);
PsiFunction psi_from_json(const Json& j);

Json to_json(const harness::BoundReport& r);
harness::BoundReport report_from_json(const Json& j);
Json to_json(const std::vector<harness::BoundReport>& reports);
std::vector<harness::BoundReport> reports_from_json(const Json& j);
/// Columns name,alpha,p,beta,d,h,lambda,lhs,rhs,ratio,pass; absent parameters are empty.
std::string to_csv(const std::vector<harness::BoundReport>& reports);

Json to_json(const harness::ExponentFit& fit);

}  // namespace fracmod::io
