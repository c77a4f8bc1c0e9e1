#include "fracmod/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <numbers>

#include "fracmod/fracops.hpp"
#include "fracmod/gls.hpp"
#include "fracmod/modulus.hpp"
#include "fracmod/norms.hpp"
#include "fracmod/oracle.hpp"
#include "fracmod/parallel.hpp"
#include "fracmod/random.hpp"

namespace fracmod::acceptance {

namespace {

// Tolerances, one per check.
constexpr double kPowerRelError = 1e-3;
constexpr double kOrderSlack = 0.3;
constexpr double kExactFloor = 1e-12;  // below this the scheme reproduces the oracle
constexpr double kRuntimeLimitSeconds = 10.0;
constexpr double kDerivativeRelError = 1e-3;
constexpr double kAbelSupError = 5e-3;
constexpr double kExponentWindow = 0.05;
constexpr double kScalingDiscrepancy = 1e-6;
constexpr double kScalingNormError = 1e-6;
constexpr double kCalibrationHeadroom = 4.0;  // fixed safety factor on every calibrated proxy
constexpr double kKdRelError = 0.02;
constexpr double kRieszRatioSpread = 0.2;
constexpr double kContinuityAtE = 1e-12;
constexpr double kModularError = 1e-6;

constexpr std::size_t kFineCells = 8192;

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

void append(std::string& detail, const std::string& part) {
  if (!detail.empty()) detail += "; ";
  detail += part;
}

std::size_t fine_cells(const AcceptanceConfig& config) { return std::min(kFineCells, 2 * config.n); }

Grid1D unit_grid(std::size_t cells) { return Grid1D(0.0, 1.0, cells + 1); }

}  // namespace

CriterionResult power_law_oracle(const AcceptanceConfig&) {
  CriterionResult out{1, "power-law oracle for frac_integral", true, "", {}};
  const auto start = std::chrono::steady_clock::now();
  const std::size_t cells[] = {256, 512, 1024, 2048, 4096};
  double worst_error = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (double beta : {0.5, 1.0}) {
      std::vector<double> hs, errors;
      for (std::size_t n : cells) {
        const Grid1D grid = unit_grid(n);
        const GridFunction image = frac_integral(sample(Power{beta}, grid), FracOrder(alpha));
        double err = 0.0;
        for (std::size_t i = 0; i < image.size(); ++i) {
          const double x = image.x(i);
          if (x < 0.05) continue;
          const double exact = oracle::power_integral(alpha, beta, x);
          err = std::max(err, std::abs(image[i] - exact) / exact);
        }
        hs.push_back(grid.step());
        errors.push_back(err);
      }
      const double finest = errors.back();
      worst_error = std::max(worst_error, finest);
      if (finest > kPowerRelError) {
        out.pass = false;
        append(out.detail, format("a=%g b=%g err=%.3e > %.0e", alpha, beta, finest, kPowerRelError));
      }
      if (finest <= kExactFloor) continue;
      const double order = harness::fit_loglog(hs, errors).slope;
      const double need = 2.0 - alpha - kOrderSlack;
      worst_margin = std::min(worst_margin, order - need);
      if (order < need) {
        out.pass = false;
        append(out.detail, format("a=%g b=%g order=%.3f < %.3f", alpha, beta, order, need));
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= kRuntimeLimitSeconds) {
    out.pass = false;
    append(out.detail, format("runtime %.1fs >= %.0fs", seconds, kRuntimeLimitSeconds));
  }
  append(out.detail, format("max rel err %.3e, min order margin %.3f", worst_error, worst_margin));
  return out;
}

CriterionResult derivative_oracle(const AcceptanceConfig& config) {
  CriterionResult out{2, "derivative oracle and Abel inversion", true, "", {}};
  const Grid1D grid = unit_grid(4096);
  const GridFunction d = frac_derivative(sample(Power{1.0}, grid), FracOrder(0.5));
  double err = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = d.x(i);
    if (x < 0.1) continue;
    const double exact = 2.0 * std::sqrt(x / std::numbers::pi);
    err = std::max(err, std::abs(d[i] - exact) / exact);
  }
  if (err > kDerivativeRelError) out.pass = false;
  append(out.detail, format("D^0.5 x rel err %.3e", err));

  std::vector<double> sup(20), alphas(20);
  std::vector<Rng> rngs;
  Rng master(config.seed ^ 0x2u);
  for (std::size_t k = 0; k < 20; ++k) {
    alphas[k] = master.uniform(0.1, 0.9);
    rngs.emplace_back(master.index(1u << 30));
  }
  parallel_for(20, [&](std::size_t k) {
    const GridFunction f = random_smooth(grid, rngs[k]);
    const FracOrder order(alphas[k]);
    const GridFunction back = frac_derivative(frac_integral(f, order), order);
    double e = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = f.x(i);
      if (x >= 0.1 && x <= 0.9) e = std::max(e, std::abs(back[i] - f[i]));
    }
    sup[k] = e;
  });
  const double worst = *std::max_element(sup.begin(), sup.end());
  if (worst > kAbelSupError) out.pass = false;
  append(out.detail, format("Abel worst sup err %.3e over 20 functions", worst));
  return out;
}

CriterionResult modulus_engine(const AcceptanceConfig& config) {
  CriterionResult out{3, "modulus engine vs pair scan", true, "", {}};
  constexpr std::size_t kCount = 200;
  std::vector<int> agree(kCount, 0);
  std::vector<Rng> rngs;
  Rng master(config.seed ^ 0x3u);
  for (std::size_t k = 0; k < kCount; ++k) rngs.emplace_back(master.index(1u << 30));
  parallel_for(kCount, [&](std::size_t k) {
    Rng& rng = rngs[k];
    const std::size_t cells = 8 + rng.index(505);
    const double a = rng.uniform(-2.0, 1.0);
    const Grid1D grid(a, a + rng.uniform(0.5, 3.0), cells + 1);
    const GridFunction f = random_samples(grid, rng);
    std::vector<double> xs(f.size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = f.x(i);
    bool same = true;
    for (int t = 0; t < 5; ++t) {
      // Stay off exact multiples of the step so both sides agree on the window.
      const double h = (static_cast<double>(rng.index(cells + 2)) + rng.uniform(0.01, 0.99)) * grid.step();
      same = same && modulus(f, h) == oracle::pair_scan_modulus(xs, f.samples(), h);
    }
    agree[k] = same ? 1 : 0;
  });
  const auto mismatches = std::count(agree.begin(), agree.end(), 0);
  if (mismatches != 0) out.pass = false;
  append(out.detail, format("%ld/%zu random functions differ from pair scan", static_cast<long>(mismatches), kCount));

  const Grid1D grid = unit_grid(config.n);
  std::vector<double> hs = harness::dyadic(1, 10);
  hs.push_back(0.3);
  hs.push_back(0.123);
  double worst = 0.0;
  for (double beta : {0.25, 0.5, 0.75, 1.0}) {
    const GridFunction f = sample(Power{beta}, grid);
    const double allowance = std::pow(grid.step(), beta);
    for (double h : hs) {
      const double excess = std::abs(modulus(f, h) - std::pow(h, beta)) / allowance;
      worst = std::max(worst, excess);
    }
  }
  if (worst > 1.0 + 1e-12) out.pass = false;
  append(out.detail, format("|w(x^b,h) - h^b| <= %.3f cell increments", worst));
  return out;
}

CriterionResult sharpness(const AcceptanceConfig& config) {
  CriterionResult out{4, "sharp exponent of I^a on x^-b", true, "", {}};
  const std::size_t cells = fine_cells(config);
  const Grid1D grid = unit_grid(cells);
  const auto hs = harness::dyadic(3, 10);
  double worst = 0.0;
  for (double alpha : {0.4, 0.6, 0.75}) {
    for (double beta : {0.1, 0.25}) {
      const GridFunction image = frac_integral(sample(SingularPower{beta}, grid), FracOrder(alpha));
      const auto fit = harness::estimate_exponent(image, hs);
      const double miss = std::abs(fit.slope - (alpha - beta));
      worst = std::max(worst, miss);
      if (miss > kExponentWindow) {
        out.pass = false;
        append(out.detail, format("a=%g b=%g slope=%.4f", alpha, beta, fit.slope));
      }
    }
  }
  append(out.detail, format("n=%zu, worst |slope - (a-b)| = %.4f", cells, worst));
  return out;
}

CriterionResult scaling_exactness(const AcceptanceConfig& config) {
  CriterionResult out{5, "dilation commutes with I^a", true, "", {}};
  const Grid1D grid = unit_grid(config.n);
  Rng rng(config.seed ^ 0x5u);
  const GridFunction rhos[] = {sample(Power{0.5}, grid), random_piecewise_linear(grid, 6, 2.0, rng)};
  double worst_disc = 0.0;
  double worst_norm = 0.0;
  for (const auto& rho : rhos) {
    for (double alpha : {0.25, 0.5, 0.75}) {
      for (double p : {2.0, 4.0}) {
        auto r = harness::check_scaling(rho, alpha, 2.0, p, harness::ScalingGrid::rescaled);
        const double disc = r.params.at("commutation_discrepancy");
        const double norm = r.params.at("norm_relative_error");
        worst_disc = std::max(worst_disc, disc);
        worst_norm = std::max(worst_norm, norm);
        if (disc > kScalingDiscrepancy || norm > kScalingNormError) out.pass = false;
        out.reports.push_back(std::move(r));
      }
    }
  }
  append(out.detail, format("lambda=2: discrepancy %.3e, norm rel err %.3e", worst_disc, worst_norm));
  return out;
}

CriterionResult upper_bounds(const AcceptanceConfig& config) {
  CriterionResult out{6, "upper bounds with fixed constants", true, "", {}};
  const Grid1D grid = unit_grid(config.n);

  // Integral bound, global L_p variant, unit-norm random functions.
  constexpr std::size_t kCount = 100;
  const auto hs = harness::dyadic(0, 8);
  std::vector<harness::BoundReport> worst(kCount, harness::make_report("", {}, 0.0, 0.0));
  std::vector<Rng> rngs;
  Rng master(config.seed ^ 0x6u);
  for (std::size_t k = 0; k < kCount; ++k) rngs.emplace_back(master.index(1u << 30));
  parallel_for(kCount, [&](std::size_t k) {
    const GridFunction f = random_piecewise_linear(grid, 3 + rngs[k].index(12), 2.0, rngs[k]);
    for (auto& r : harness::check_integral_bound(f, 0.75, 2.0, hs, harness::IntegralBoundVariant::global_lp)) {
      if (r.ratio > worst[k].ratio) worst[k] = std::move(r);
    }
  });
  const auto top = std::max_element(worst.begin(), worst.end(),
                                    [](const auto& x, const auto& y) { return x.ratio < y.ratio; });
  const auto failures = std::count_if(worst.begin(), worst.end(), [](const auto& r) { return !r.pass; });
  if (failures != 0) out.pass = false;
  append(out.detail, format("integral bound: %ld/%zu fail, max ratio %.4f", static_cast<long>(failures), kCount,
                            top->ratio));
  out.reports.push_back(*top);

  // Derivative bound on x^b: calibrate C once, then hold it fixed.
  const auto dh = harness::dyadic(1, 8);
  double calibration = 0.0;
  for (const auto& r : harness::check_derivative_bound(sample(Power{0.75}, grid), 0.5, dh)) {
    calibration = std::max(calibration, r.ratio);
  }
  const double constant = kCalibrationHeadroom * calibration;
  double max_ratio = 0.0;
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (double beta : {0.3, 0.5, 0.75, 0.9, 1.0}) {
      if (!(beta > alpha)) continue;
      for (auto& r : harness::check_derivative_bound(sample(Power{beta}, grid), alpha, dh, constant)) {
        if (!r.pass) {
          out.pass = false;
          append(out.detail, format("derivative bound fails a=%g b=%g h=%g ratio=%.4f", alpha, beta,
                                    r.params.at("h"), r.ratio));
        }
        if (r.ratio > max_ratio) {
          max_ratio = r.ratio;
          r.params["beta"] = beta;
          if (!out.reports.empty() && out.reports.back().name == "derivative_bound") out.reports.pop_back();
          out.reports.push_back(r);
        }
      }
    }
  }
  append(out.detail, format("derivative bound: C=%.4f (calibrated x%.0f), max ratio %.4f (%.4f unscaled)", constant,
                            kCalibrationHeadroom, max_ratio, max_ratio * kCalibrationHeadroom));
  return out;
}

CriterionResult kd_curve(const AcceptanceConfig&) {
  CriterionResult out{7, "K_D closed-form curve", true, "", {}};
  const double betas[] = {0.6, 0.8, 1.0};
  const auto curve = harness::lower_bound_kd(0.5, betas, 4096, 0.25);
  double worst = 0.0;
  for (const auto& pt : curve.points) {
    const double rel = std::abs(pt.measured / oracle::kd_ratio(0.5, pt.beta) - 1.0);
    worst = std::max(worst, rel);
  }
  if (worst > kKdRelError) out.pass = false;
  if (!curve.increasing || curve.sup_beta != 1.0) out.pass = false;
  append(out.detail, format("max rel err %.3e, increasing=%s, sup at b=%g, matching reading %s", worst,
                            curve.increasing ? "yes" : "no", curve.sup_beta, curve.matching_reading.c_str()));
  return out;
}

CriterionResult riesz_exponent(const AcceptanceConfig& config) {
  CriterionResult out{8, "Riesz exponent and ratio stability", true, "", {}};
  const std::size_t cells = fine_cells(config);
  const GridFunctionND f =
      sample_box({Axis{-2.0, 2.0, cells + 1}}, [](double x, double) { return std::abs(x) < 1.0 ? 1.0 : 0.0; });
  const double alpha = 0.75;
  const auto hs = harness::dyadic(3, 10);
  const auto omega = harness::riesz_moduli(f, alpha, hs);
  const double slope = harness::fit_loglog(hs, omega).slope;
  for (double p : {2.0, 4.0}) {
    const double need = alpha - 1.0 / p - kExponentWindow;
    if (slope < need) out.pass = false;
    auto reports = harness::check_riesz_bound(f, alpha, p, hs);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& r : reports) {
      lo = std::min(lo, r.params.at("kr_sample"));
      hi = std::max(hi, r.params.at("kr_sample"));
    }
    const double spread = hi / lo - 1.0;
    if (!(spread < kRieszRatioSpread) || !std::isfinite(hi)) out.pass = false;
    append(out.detail, format("p=%g slope %.4f (need >= %.3f), ratio %.4f..%.4f spread %.1f%% (need < %.0f%%)", p,
                              slope, need, lo, hi, 100.0 * spread, 100.0 * kRieszRatioSpread));
    for (auto& r : reports) out.reports.push_back(std::move(r));
  }
  return out;
}

CriterionResult gls_machinery(const AcceptanceConfig& config) {
  CriterionResult out{9, "grand Lebesgue space machinery", true, "", {}};
  Rng rng(config.seed ^ 0x9u);
  const GridFunctionND g(random_samples(unit_grid(512), rng));
  int exact_failures = 0;
  for (double r : {1.5, 2.0, 3.0, 4.5}) {
    const auto psi = PsiFunction::degenerate(r, 1.0, 8.0);
    auto grid = default_p_grid(1.0, 8.0, 16);
    grid.push_back(r);
    std::sort(grid.begin(), grid.end());
    if (gls_norm(g, psi, grid).value != lp_norm(g, r)) ++exact_failures;
    for (double delta : {0.5, 0.125, 1e-3}) {
      if (fundamental_function(psi, delta, grid).value != std::pow(delta, 1.0 / r)) ++exact_failures;
    }
  }
  if (exact_failures != 0) out.pass = false;
  append(out.detail, format("degenerate psi: %d inexact values", exact_failures));

  // Fundamental-function bound on an indicator, K_R calibrated at the largest delta.
  const std::size_t cells = config.n;
  const GridFunctionND f =
      sample_box({Axis{-2.0, 2.0, cells + 1}}, [](double x, double) { return std::abs(x) < 1.0 ? 1.0 : 0.0; });
  const double alpha = 0.75;
  const auto deltas = harness::dyadic(3, 10);
  harness::GlsOptions options;
  const auto raw = harness::check_gls_bounds(f, alpha, std::span(deltas).last(1), harness::GlsBound::fundamental,
                                             options);
  const double calibrated = raw.front().ratio;
  options.kr_proxy = kCalibrationHeadroom * calibrated;
  auto reports = harness::check_gls_bounds(f, alpha, deltas, harness::GlsBound::fundamental, options);
  double max_ratio = 0.0;
  for (const auto& r : reports) {
    if (r.params.at("h") < deltas.back()) {
      max_ratio = std::max(max_ratio, r.ratio);
      if (!r.pass) out.pass = false;
    }
  }
  append(out.detail, format("K_R proxy %.4f (calibrated at delta=%g, x%.0f), max ratio below it %.4f (%.4f unscaled)",
                            options.kr_proxy, deltas.back(), kCalibrationHeadroom, max_ratio,
                            max_ratio * kCalibrationHeadroom));
  out.reports = std::move(reports);
  return out;
}

CriterionResult orlicz(const AcceptanceConfig& config) {
  CriterionResult out{10, "Young-Orlicz function and Luxemburg norm", true, "", {}};
  double jump = 0.0;
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    for (double gamma : {0.5, 1.0, 2.0}) {
      const OrliczParams params(p, gamma);
      const double e = std::numbers::e;
      const double at = young_orlicz(e, params);
      const double above = young_orlicz(std::nextafter(e, 4.0), params);
      jump = std::max(jump, std::abs(above - at) / at);
    }
  }
  if (jump > kContinuityAtE) out.pass = false;
  append(out.detail, format("relative jump at e %.3e", jump));

  constexpr std::size_t kCount = 50;
  std::vector<double> err(kCount);
  std::vector<Rng> rngs;
  Rng master(config.seed ^ 0xAu);
  for (std::size_t k = 0; k < kCount; ++k) rngs.emplace_back(master.index(1u << 30));
  parallel_for(kCount, [&](std::size_t k) {
    Rng& rng = rngs[k];
    const double amplitude = rng.uniform(0.1, 50.0);
    const GridFunctionND f(random_samples(unit_grid(512), rng).scaled(amplitude));
    const OrliczParams params(rng.uniform(1.2, 4.0), rng.uniform(0.2, 2.0));
    const double norm = luxemburg_norm(f, params);
    err[k] = std::abs(orlicz_modular(f, norm, params) - 1.0);
  });
  const double worst = *std::max_element(err.begin(), err.end());
  if (worst > kModularError) out.pass = false;
  append(out.detail, format("worst |modular(f/|f|) - 1| %.3e over %zu functions", worst, kCount));
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "power-law oracle for frac_integral", power_law_oracle},
      {2, "derivative oracle and Abel inversion", derivative_oracle},
      {3, "modulus engine vs pair scan", modulus_engine},
      {4, "sharp exponent of I^a on x^-b", sharpness},
      {5, "dilation commutes with I^a", scaling_exactness},
      {6, "upper bounds with fixed constants", upper_bounds},
      {7, "K_D closed-form curve", kd_curve},
      {8, "Riesz exponent and ratio stability", riesz_exponent},
      {9, "grand Lebesgue space machinery", gls_machinery},
      {10, "Young-Orlicz function and Luxemburg norm", orlicz},
  };
  return all;
}

std::vector<CriterionResult> run_all(const AcceptanceConfig& config) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(c.run(config));
  return out;
}

}  // namespace fracmod::acceptance
