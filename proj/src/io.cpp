#include "fracmod/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace fracmod::io {

namespace {

const char* const kCsvColumns[] = {"alpha", "p", "beta", "d", "h", "lambda"};

}  // namespace

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double to_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw FormatError("expected a number, got " + j.dump());
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json to_json(const GridFunction& f) {
  Json samples = Json::array();
  for (double s : f.samples()) samples.push_back(number(s));
  return {{"grid", {{"a", f.grid().a()}, {"b", f.grid().b()}, {"n", f.grid().n()}}}, {"samples", samples}};
}

GridFunction grid_function_from_json(const Json& j) {
  try {
    const auto& g = j.at("grid");
    std::vector<double> samples;
    for (const auto& s : j.at("samples")) samples.push_back(to_number(s));
    return {Grid1D(to_number(g.at("a")), to_number(g.at("b")), g.at("n").get<std::size_t>()), std::move(samples)};
  } catch (const Json::exception& e) {
    throw FormatError(std::string("grid function: ") + e.what());
  }
}

std::string to_csv(const GridFunction& f) {
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) out += format_double(f.x(i)) + "," + format_double(f[i]) + "\n";
  return out;
}

std::string to_csv(const GridFunctionND& f) {
  if (f.dim() == 1) return to_csv(f.as_1d());
  std::string out = "x,y,value\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto c = f.coords(k);
    out += format_double(c[0]) + "," + format_double(c[1]) + "," + format_double(f[k]) + "\n";
  }
  return out;
}

std::string to_csv(const ModulusProfile& profile) {
  std::string out = "h,omega\n";
  for (std::size_t k = 0; k < profile.h_values.size(); ++k) {
    out += format_double(profile.h_values[k]) + "," + format_double(profile.omega_values[k]) + "\n";
  }
  return out;
}

Json to_json(const ModulusProfile& profile) {
  Json h = Json::array(), omega = Json::array();
  for (double v : profile.h_values) h.push_back(number(v));
  for (double v : profile.omega_values) omega.push_back(number(v));
  return {{"h", h}, {"omega", omega}};
}

Json to_json(const PsiFunction& psi) {
  Json j;
  j["A"] = psi.A();
  j["B"] = std::isfinite(psi.B()) ? Json(psi.B()) : Json(nullptr);
  if (psi.is_degenerate()) {
    j["r"] = psi.point();
    return j;
  }
  if (psi.nodes().empty()) throw FormatError("psi: only tabulated or degenerate psi can be serialised");
  Json p = Json::array(), v = Json::array();
  for (double x : psi.nodes()) p.push_back(x);
  for (double x : psi.node_values()) v.push_back(number(x));
  j["p_grid"] = p;
  j["values"] = v;
  return j;
}

PsiFunction psi_from_json(const Json& j) {
  try {
    const double A = to_number(j.at("A"));
    const double B = j.at("B").is_null() ? std::numeric_limits<double>::infinity() : to_number(j.at("B"));
    if (j.contains("r")) return PsiFunction::degenerate(to_number(j.at("r")), A, B);
    std::vector<double> p, v;
    for (const auto& x : j.at("p_grid")) p.push_back(to_number(x));
    for (const auto& x : j.at("values")) v.push_back(to_number(x));
    return PsiFunction::tabulated(std::move(p), std::move(v));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("psi: ") + e.what());
  }
}

Json to_json(const harness::BoundReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  Json j{{"name", r.name}, {"params", params}, {"lhs", number(r.lhs)}, {"rhs", number(r.rhs)},
         {"ratio", number(r.ratio)}, {"pass", r.pass}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

harness::BoundReport report_from_json(const Json& j) {
  try {
    harness::BoundReport r;
    r.name = j.at("name").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = to_number(v);
    r.lhs = to_number(j.at("lhs"));
    r.rhs = to_number(j.at("rhs"));
    r.ratio = to_number(j.at("ratio"));
    r.pass = j.at("pass").get<bool>();
    if (j.contains("notes")) r.notes = j.at("notes").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
}

Json to_json(const std::vector<harness::BoundReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::vector<harness::BoundReport> reports_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("reports: expected an array");
  std::vector<harness::BoundReport> out;
  for (const auto& r : j) out.push_back(report_from_json(r));
  return out;
}

std::string to_csv(const std::vector<harness::BoundReport>& reports) {
  std::string out = "name,alpha,p,beta,d,h,lambda,lhs,rhs,ratio,pass\n";
  for (const auto& r : reports) {
    out += r.name;
    for (const char* col : kCsvColumns) {
      out += ",";
      if (auto it = r.params.find(col); it != r.params.end()) out += format_double(it->second);
    }
    out += "," + format_double(r.lhs) + "," + format_double(r.rhs) + "," + format_double(r.ratio) + ",";
    out += r.pass ? "true\n" : "false\n";
  }
  return out;
}

Json to_json(const harness::ExponentFit& fit) {
  return {{"slope", number(fit.slope)},   {"intercept", number(fit.intercept)}, {"r_squared", number(fit.r_squared)},
          {"h_lo", number(fit.h_lo)},     {"h_hi", number(fit.h_hi)}};
}

}  // namespace fracmod::io
