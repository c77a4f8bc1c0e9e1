// Command-line front end: acceptance suite, parameter sweeps, single
// transforms and report conversion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracmod/acceptance.hpp"
#include "fracmod/fracops.hpp"
#include "fracmod/harness.hpp"
#include "fracmod/io.hpp"
#include "fracmod/parallel.hpp"
#include "fracmod/random.hpp"

namespace {

using namespace fracmod;
using io::Json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical domain error tagged with the parameter tuple that raised it.
struct TupleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string cmd;
  std::vector<double> alpha;
  std::vector<double> p;
  std::vector<double> beta;
  int d = 1;
  std::size_t n = 4096;
  std::string h = "dyadic:3:10";
  double lambda = 2.0;
  std::map<std::string, double> proxy;
  std::string f;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = acceptance::AcceptanceConfig{}.seed;
  std::string variant = "global";
  std::string bound = "fundamental";
  std::string input;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad number for " + what + ": '" + s + "'");
}

ClosedFormFunction parse_function(const std::string& spec) {
  const auto parts = split(spec, ':');
  const auto arg = [&](std::size_t k) {
    if (k >= parts.size()) throw UsageError("--f " + spec + ": missing parameter");
    return parse_double(parts[k], "--f");
  };
  ClosedFormFunction f;
  if (parts.empty()) throw UsageError("--f: empty spec");
  if (parts[0] == "power") {
    f = Power{arg(1)};
  } else if (parts[0] == "singular") {
    f = SingularPower{arg(1)};
  } else if (parts[0] == "indicator") {
    f = Indicator{arg(1), arg(2)};
  } else if (parts[0] == "const") {
    f = Constant{arg(1)};
  } else {
    throw UsageError("--f: unknown family '" + parts[0] + "' (power, singular, indicator, const)");
  }
  try {
    validate(f);
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("--f ") + spec + ": " + e.what());
  }
  return f;
}

// "0.1,0.2" or "dyadic:k_lo:k_hi" (h = 2^-k, k_lo <= k <= k_hi).
std::vector<double> parse_h(const std::string& spec) {
  if (spec.rfind("dyadic:", 0) == 0) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw UsageError("--h: expected dyadic:k_lo:k_hi");
    const int lo = static_cast<int>(parse_double(parts[1], "--h"));
    const int hi = static_cast<int>(parse_double(parts[2], "--h"));
    if (lo > hi) throw UsageError("--h: k_lo must not exceed k_hi");
    return harness::dyadic(lo, hi);
  }
  std::vector<double> hs;
  for (const auto& part : split(spec, ',')) hs.push_back(parse_double(part, "--h"));
  if (hs.empty()) throw UsageError("--h: empty list");
  for (double h : hs) {
    if (!(h > 0.0)) throw UsageError("--h: values must be positive");
  }
  std::sort(hs.begin(), hs.end());
  return hs;
}

std::string tuple_name(const std::map<std::string, double>& params) {
  std::string s = "(";
  for (const auto& [k, v] : params) {
    if (s.size() > 1) s += ", ";
    s += k + "=" + io::format_double(v);
  }
  return s + ")";
}

template <class Fn>
auto tagged(const std::map<std::string, double>& params, Fn&& fn) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    throw TupleError(std::string(e.what()) + " at " + tuple_name(params));
  } catch (const std::range_error& e) {
    throw TupleError(std::string(e.what()) + " at " + tuple_name(params));
  }
}

void require_nonempty(const std::vector<double>& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required for this command");
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

double proxy(const RunConfig& c, const std::string& key, double fallback) {
  const auto it = c.proxy.find(key);
  return it == c.proxy.end() ? fallback : it->second;
}

// Box [-2, 2]^d with n cells per axis; in 2-D the profile is radial.
GridFunctionND sample_riesz_input(const RunConfig& c) {
  const auto fn = parse_function(c.f.empty() ? "indicator:-1:1" : c.f);
  const Axis axis{-2.0, 2.0, c.n + 1};
  if (c.d == 1) return sample_box({axis}, [&](double x, double) { return evaluate(fn, x); });
  return sample_box({axis, axis}, [&](double x, double y) { return evaluate(fn, std::hypot(x, y)); });
}

Grid1D unit_grid(const RunConfig& c) { return Grid1D(0.0, 1.0, c.n + 1); }

void emit(const RunConfig& c, const std::string& content) {
  if (c.out.empty()) {
    std::cout << content;
  } else {
    io::write_atomic(c.out, content);
  }
}

Json envelope(const RunConfig& c) {
  return {{"schema", 1}, {"command", c.command}, {"seed", c.seed}, {"n", c.n}};
}

// Runs one job per parameter tuple, in parallel, keeping input order.
template <class T>
std::vector<T> run_tuples(const std::vector<std::map<std::string, double>>& tuples,
                          const std::function<T(const std::map<std::string, double>&)>& job) {
  std::vector<T> results(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t k) { results[k] = tagged(tuples[k], [&] { return job(tuples[k]); }); });
  return results;
}

std::vector<std::map<std::string, double>> cross(const std::vector<std::pair<std::string, std::vector<double>>>& axes) {
  std::vector<std::map<std::string, double>> out{{}};
  for (const auto& [key, values] : axes) {
    std::vector<std::map<std::string, double>> next;
    for (const auto& partial : out) {
      for (double v : sorted(values)) {
        auto t = partial;
        t[key] = v;
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string render_reports(const RunConfig& c, const std::vector<harness::BoundReport>& reports) {
  if (c.format == "csv") return io::to_csv(reports);
  Json j = envelope(c);
  j["cmd"] = c.cmd;
  j["reports"] = io::to_json(reports);
  return j.dump(2) + "\n";
}

int run_verify(const RunConfig& c) {
  const acceptance::AcceptanceConfig config{c.n, c.seed};
  Json criteria = Json::array();
  std::vector<harness::BoundReport> all_reports;
  bool pass = true;
  for (const auto& criterion : acceptance::criteria()) {
    const auto r = criterion.run(config);
    std::fprintf(stderr, "[%s] %2d %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
    pass = pass && r.pass;
    criteria.push_back({{"id", r.id},
                        {"title", r.title},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"reports", io::to_json(r.reports)}});
    all_reports.insert(all_reports.end(), r.reports.begin(), r.reports.end());
  }
  if (c.format == "csv") {
    emit(c, io::to_csv(all_reports));
  } else {
    Json j = envelope(c);
    j["pass"] = pass;
    j["criteria"] = criteria;
    emit(c, j.dump(2) + "\n");
  }
  return pass ? 0 : kExitFailure;
}

int run_sharpness(const RunConfig& c) {
  require_nonempty(c.alpha, "--alpha");
  require_nonempty(c.beta, "--beta");
  const auto hs = parse_h(c.h);
  const auto tuples = cross({{"alpha", c.alpha}, {"beta", c.beta}});
  const Grid1D grid = unit_grid(c);
  const auto fits = run_tuples<harness::ExponentFit>(tuples, [&](const auto& t) {
    const GridFunction image = frac_integral(sample(SingularPower{t.at("beta")}, grid), FracOrder(t.at("alpha")));
    return harness::estimate_exponent(image, hs);
  });
  if (c.format == "csv") {
    std::string s = "alpha,beta,slope,target,intercept,r_squared,h_lo,h_hi\n";
    for (std::size_t k = 0; k < fits.size(); ++k) {
      const double a = tuples[k].at("alpha"), b = tuples[k].at("beta");
      s += io::format_double(a) + "," + io::format_double(b) + "," + io::format_double(fits[k].slope) + "," +
           io::format_double(a - b) + "," + io::format_double(fits[k].intercept) + "," +
           io::format_double(fits[k].r_squared) + "," + io::format_double(fits[k].h_lo) + "," +
           io::format_double(fits[k].h_hi) + "\n";
    }
    emit(c, s);
    return 0;
  }
  Json j = envelope(c);
  j["cmd"] = c.cmd;
  Json rows = Json::array();
  for (std::size_t k = 0; k < fits.size(); ++k) {
    Json row = io::to_json(fits[k]);
    row["alpha"] = tuples[k].at("alpha");
    row["beta"] = tuples[k].at("beta");
    row["target"] = tuples[k].at("alpha") - tuples[k].at("beta");
    rows.push_back(row);
  }
  j["fits"] = rows;
  emit(c, j.dump(2) + "\n");
  return 0;
}

int run_kd_curve(const RunConfig& c) {
  require_nonempty(c.alpha, "--alpha");
  require_nonempty(c.beta, "--beta");
  const double h = parse_h(c.h).back();
  std::vector<harness::KdCurve> curves;
  for (double alpha : sorted(c.alpha)) {
    curves.push_back(tagged({{"alpha", alpha}, {"h", h}}, [&] { return harness::lower_bound_kd(alpha, c.beta, c.n, h); }));
  }
  if (c.format == "csv") {
    std::string s = "alpha,beta,measured,closed_normalized,closed_unnormalized,closed_printed\n";
    for (const auto& curve : curves) {
      for (const auto& pt : curve.points) {
        s += io::format_double(curve.alpha) + "," + io::format_double(pt.beta) + "," + io::format_double(pt.measured) +
             "," + io::format_double(pt.closed_normalized) + "," + io::format_double(pt.closed_unnormalized) + "," +
             io::format_double(pt.closed_printed) + "\n";
      }
    }
    emit(c, s);
    return 0;
  }
  Json j = envelope(c);
  j["cmd"] = c.cmd;
  Json arr = Json::array();
  for (const auto& curve : curves) {
    Json pts = Json::array();
    for (const auto& pt : curve.points) {
      pts.push_back({{"beta", pt.beta},
                     {"measured", io::number(pt.measured)},
                     {"closed_normalized", io::number(pt.closed_normalized)},
                     {"closed_unnormalized", io::number(pt.closed_unnormalized)},
                     {"closed_printed", io::number(pt.closed_printed)}});
    }
    arr.push_back({{"alpha", curve.alpha},
                   {"h", curve.h},
                   {"points", pts},
                   {"sup_beta", curve.sup_beta},
                   {"increasing", curve.increasing},
                   {"matching_reading", curve.matching_reading}});
  }
  j["curves"] = arr;
  emit(c, j.dump(2) + "\n");
  return 0;
}

using Reports = std::vector<harness::BoundReport>;

int emit_reports(const RunConfig& c, const std::vector<Reports>& groups) {
  Reports all;
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  emit(c, render_reports(c, all));
  return 0;
}

int run_sweep(const RunConfig& c) {
  const std::string& cmd = c.cmd;
  if (cmd == "sharpness") return run_sharpness(c);
  if (cmd == "kd-curve") return run_kd_curve(c);
  const auto hs = parse_h(c.h);

  if (cmd == "integral-bound") {
    require_nonempty(c.alpha, "--alpha");
    require_nonempty(c.p, "--p");
    if (c.variant != "global" && c.variant != "local") throw UsageError("--variant must be global or local");
    const auto variant =
        c.variant == "local" ? harness::IntegralBoundVariant::local_delta : harness::IntegralBoundVariant::global_lp;
    const Grid1D grid = unit_grid(c);
    // Without --f, each tuple gets a seeded random unit-L_p piecewise-linear function.
    std::optional<ClosedFormFunction> fn;
    if (!c.f.empty()) fn = parse_function(c.f);
    const auto tuples = cross({{"alpha", c.alpha}, {"p", c.p}});
    return emit_reports(c, run_tuples<Reports>(tuples, [&](const auto& t) {
                          Rng rng(c.seed);
                          const GridFunction f = fn ? sample(*fn, grid) : random_piecewise_linear(grid, 8, t.at("p"), rng);
                          return harness::check_integral_bound(f, t.at("alpha"), t.at("p"), hs, variant);
                        }));
  }
  if (cmd == "derivative-bound") {
    require_nonempty(c.alpha, "--alpha");
    require_nonempty(c.beta, "--beta");
    const Grid1D grid = unit_grid(c);
    const double constant = proxy(c, "C", 1.0);
    const auto tuples = cross({{"alpha", c.alpha}, {"beta", c.beta}});
    return emit_reports(c, run_tuples<Reports>(tuples, [&](const auto& t) {
                          auto reports = harness::check_derivative_bound(sample(Power{t.at("beta")}, grid),
                                                                         t.at("alpha"), hs, constant);
                          for (auto& r : reports) r.params["beta"] = t.at("beta");
                          return reports;
                        }));
  }
  if (cmd == "scaling") {
    require_nonempty(c.alpha, "--alpha");
    require_nonempty(c.p, "--p");
    const Grid1D grid = unit_grid(c);
    const auto fn = parse_function(c.f.empty() ? "power:1" : c.f);
    const auto mode = proxy(c, "resampled", 0.0) != 0.0 ? harness::ScalingGrid::resampled : harness::ScalingGrid::rescaled;
    const auto tuples = cross({{"alpha", c.alpha}, {"p", c.p}});
    return emit_reports(c, run_tuples<Reports>(tuples, [&](const auto& t) {
                          return Reports{harness::check_scaling(sample(fn, grid), t.at("alpha"), c.lambda, t.at("p"), mode)};
                        }));
  }
  if (cmd == "riesz") {
    require_nonempty(c.alpha, "--alpha");
    require_nonempty(c.p, "--p");
    const GridFunctionND f = sample_riesz_input(c);
    const double constant = proxy(c, "C", 1.0);
    const auto tuples = cross({{"alpha", c.alpha}, {"p", c.p}});
    return emit_reports(c, run_tuples<Reports>(tuples, [&](const auto& t) {
                          if (c.proxy.count("gamma")) {
                            return harness::check_riesz_orlicz_bound(f, t.at("alpha"),
                                                                     OrliczParams(t.at("p"), c.proxy.at("gamma")), hs,
                                                                     constant);
                          }
                          return harness::check_riesz_bound(f, t.at("alpha"), t.at("p"), hs, constant);
                        }));
  }
  if (cmd == "gls") {
    require_nonempty(c.alpha, "--alpha");
    const GridFunctionND f = sample_riesz_input(c);
    harness::GlsBound which;
    if (c.bound == "fundamental") {
      which = harness::GlsBound::fundamental;
    } else if (c.bound == "orlicz-log") {
      which = harness::GlsBound::orlicz_log;
    } else if (c.bound == "log-moment") {
      which = harness::GlsBound::log_moment;
    } else {
      throw UsageError("--bound must be fundamental, orlicz-log or log-moment");
    }
    harness::GlsOptions options;
    options.kr_proxy = proxy(c, "kr", 1.0);
    options.gamma = proxy(c, "gamma", 1.0);
    options.gamma0 = proxy(c, "gamma0", 0.0);
    options.gamma1 = proxy(c, "gamma1", 0.0);
    options.constant = proxy(c, "C", 1.0);
    options.p_grid = c.p;
    const auto tuples = cross({{"alpha", c.alpha}});
    return emit_reports(c, run_tuples<Reports>(tuples, [&](const auto& t) {
                          return harness::check_gls_bounds(f, t.at("alpha"), hs, which, options);
                        }));
  }
  throw UsageError("--cmd must be one of sharpness, integral-bound, derivative-bound, kd-curve, riesz, scaling, gls");
}

int run_transform(const RunConfig& c) {
  if (c.f.empty() && c.command != "riesz") throw UsageError("--f is required");
  if (c.command == "modulus") {
    const auto fn = parse_function(c.f);
    const GridFunction f = sample(fn, unit_grid(c));
    const auto profile = tagged({}, [&] { return modulus_profile(f, parse_h(c.h)); });
    if (c.format == "csv") {
      emit(c, io::to_csv(profile));
    } else {
      Json j = envelope(c);
      j["profile"] = io::to_json(profile);
      emit(c, j.dump(2) + "\n");
    }
    return 0;
  }
  require_nonempty(c.alpha, "--alpha");
  if (c.alpha.size() != 1) throw UsageError("--alpha takes a single value here");
  const double alpha = c.alpha.front();
  if (c.command == "riesz") {
    const auto image = tagged({{"alpha", alpha}, {"d", static_cast<double>(c.d)}},
                              [&] { return riesz_potential(sample_riesz_input(c), FracOrder(alpha)); });
    if (c.format == "json" && image.dim() == 1) {
      Json j = envelope(c);
      j["function"] = io::to_json(image.as_1d());
      emit(c, j.dump(2) + "\n");
    } else {
      emit(c, io::to_csv(image));
    }
    return 0;
  }
  const GridFunction f = sample(parse_function(c.f), unit_grid(c));
  const auto image = tagged({{"alpha", alpha}}, [&] {
    return c.command == "fracint" ? frac_integral(f, FracOrder(alpha)) : frac_derivative(f, FracOrder(alpha));
  });
  if (c.format == "json") {
    Json j = envelope(c);
    j["function"] = io::to_json(image);
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, io::to_csv(image));
  }
  return 0;
}

int run_report(const RunConfig& c) {
  if (c.input.empty()) throw UsageError("report: input JSON path required");
  const Json j = Json::parse(io::read_file(c.input));
  std::vector<harness::BoundReport> reports;
  if (j.is_array()) {
    reports = io::reports_from_json(j);
  } else if (j.contains("reports")) {
    reports = io::reports_from_json(j.at("reports"));
  } else if (j.contains("criteria")) {
    for (const auto& crit : j.at("criteria")) {
      const auto part = io::reports_from_json(crit.at("reports"));
      reports.insert(reports.end(), part.begin(), part.end());
    }
  } else {
    throw UsageError("report: no reports found in " + c.input);
  }
  emit(c, io::to_csv(reports));
  return 0;
}

// Fills every field the command line left unset from a JSON config file.
void merge_config(RunConfig& c, const Json& j, const CLI::App& app) {
  const auto unset = [&](const char* flag) {
    const auto* opt = app.get_option_no_throw(flag);
    return opt == nullptr || opt->count() == 0;
  };
  const auto list = [&](const char* key, std::vector<double>& dst) {
    if (!j.contains(key) || !unset((std::string("--") + key).c_str())) return;
    dst.clear();
    if (j.at(key).is_array()) {
      for (const auto& v : j.at(key)) dst.push_back(io::to_number(v));
    } else {
      dst.push_back(io::to_number(j.at(key)));
    }
  };
  const auto scalar = [&](const char* key, auto& dst) {
    if (j.contains(key) && unset((std::string("--") + key).c_str())) j.at(key).get_to(dst);
  };
  list("alpha", c.alpha);
  list("p", c.p);
  list("beta", c.beta);
  scalar("d", c.d);
  scalar("n", c.n);
  scalar("lambda", c.lambda);
  scalar("f", c.f);
  scalar("out", c.out);
  scalar("format", c.format);
  scalar("seed", c.seed);
  scalar("cmd", c.cmd);
  scalar("variant", c.variant);
  scalar("bound", c.bound);
  if (j.contains("h") && unset("--h")) {
    if (j.at("h").is_array()) {
      std::string s;
      for (const auto& v : j.at("h")) s += (s.empty() ? "" : ",") + io::format_double(io::to_number(v));
      c.h = s;
    } else {
      c.h = j.at("h").get<std::string>();
    }
  }
  if (j.contains("proxy") && unset("--proxy")) {
    for (const auto& [k, v] : j.at("proxy").items()) c.proxy[k] = io::to_number(v);
  }
}

void validate_config(const RunConfig& c) {
  if (c.n < 64) throw UsageError("--n must be at least 64");
  if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
  if (c.d != 1 && c.d != 2) throw UsageError("--d must be 1 or 2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional operators, moduli of continuity and bound checks"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  RunConfig c;
  std::string config_path;
  std::vector<std::string> proxies;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file; flags override it");
    sub->add_option("--n", c.n, "grid cells (>= 64)");
    sub->add_option("--out", c.out, "output path (default stdout)");
    sub->add_option("--format", c.format, "json or csv");
    sub->add_option("--seed", c.seed, "random seed");
  };
  const auto params = [&](CLI::App* sub) {
    sub->add_option("--alpha", c.alpha, "order(s)")->delimiter(',');
    sub->add_option("--p", c.p, "exponent(s)")->delimiter(',');
    sub->add_option("--beta", c.beta, "power(s)")->delimiter(',');
    sub->add_option("--d", c.d, "dimension (1 or 2)");
    sub->add_option("--h", c.h, "h list or dyadic:k_lo:k_hi");
    sub->add_option("--lambda", c.lambda, "dilation factor");
    sub->add_option("--proxy", proxies, "proxy constant key=value")->delimiter(',');
    sub->add_option("--f", c.f, "power:b | singular:b | indicator:c:d | const:c");
  };

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  common(verify);
  auto* sweep = app.add_subcommand("sweep", "cross parameter lists and write report tables");
  common(sweep);
  params(sweep);
  sweep->add_option("--cmd", c.cmd, "sharpness|integral-bound|derivative-bound|kd-curve|riesz|scaling|gls");
  sweep->add_option("--variant", c.variant, "integral-bound: global or local");
  sweep->add_option("--bound", c.bound, "gls: fundamental, orlicz-log or log-moment");
  for (const char* name : {"fracint", "fracder", "riesz", "modulus"}) {
    auto* sub = app.add_subcommand(name, std::string("single transform: ") + name);
    common(sub);
    params(sub);
  }
  auto* report = app.add_subcommand("report", "re-render a stored JSON run as CSV");
  common(report);
  report->add_option("input", c.input, "JSON run file")->required();

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    c.command = sub->get_name();
    if (!config_path.empty()) merge_config(c, Json::parse(io::read_file(config_path)), *sub);
    for (const auto& kv : proxies) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--proxy expects key=value, got '" + kv + "'");
      c.proxy[kv.substr(0, eq)] = parse_double(kv.substr(eq + 1), "--proxy");
    }
    validate_config(c);
    if (c.command == "sweep" && c.cmd.empty()) throw UsageError("sweep: --cmd is required");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c.command == "verify") return run_verify(c);
    if (c.command == "sweep") return run_sweep(c);
    if (c.command == "report") return run_report(c);
    return run_transform(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TupleError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::range_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
