#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "fracmod/fracops.hpp"
#include "fracmod/harness.hpp"
#include "fracmod/oracle.hpp"
#include "fracmod/random.hpp"

using namespace fracmod;
using namespace fracmod::harness;

TEST_SUITE("harness") {

TEST_CASE("report ratio semantics") {
  CHECK(make_report("x", {}, 0.0, 0.0).ratio == 0.0);
  CHECK(make_report("x", {}, 0.0, 0.0).pass);
  CHECK(std::isinf(make_report("x", {}, 1.0, 0.0).ratio));
  CHECK_FALSE(make_report("x", {}, 1.0, 0.0).pass);
  CHECK(make_report("x", {}, 1.0, 1.0).pass);
  CHECK_FALSE(make_report("x", {}, 1.0 + 1e-6, 1.0).pass);
}

TEST_CASE("log-log fit recovers a power law") {
  const auto hs = dyadic(1, 8);
  CHECK(hs.front() == std::ldexp(1.0, -8));
  CHECK(hs.back() == 0.5);
  std::vector<double> omega;
  for (double h : hs) omega.push_back(3.0 * std::pow(h, 0.4));
  const auto fit = fit_loglog(hs, omega);
  CHECK(fit.slope == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  omega[2] = 0.0;
  CHECK_THROWS_AS(fit_loglog(hs, omega), DegenerateFitError);
  const std::vector<double> three{0.1, 0.2, 0.3};
  CHECK_THROWS_AS(fit_loglog(three, three), DegenerateFitError);
}

TEST_CASE("constant function gives a degenerate fit") {
  const auto f = sample(Constant{1.0}, Grid1D(0.0, 1.0, 257));
  const auto hs = dyadic(1, 6);
  CHECK_THROWS_AS(estimate_exponent(f, hs), DegenerateFitError);
}

TEST_CASE("zero function passes every bound trivially") {
  const Grid1D grid(0.0, 1.0, 257);
  const auto zero = sample(Constant{0.0}, grid);
  const auto hs = dyadic(1, 5);
  for (const auto& r : check_integral_bound(zero, 0.75, 2.0, hs, IntegralBoundVariant::local_delta)) CHECK(r.pass);
  for (const auto& r : check_derivative_bound(zero, 0.5, hs)) CHECK(r.pass);
  const GridFunctionND z2 = sample_box({Axis{-2.0, 2.0, 257}}, [](double, double) { return 0.0; });
  for (const auto& r : check_riesz_bound(z2, 0.75, 2.0, hs)) CHECK(r.pass);
}

TEST_CASE("integral bound on the singular family decays") {
  const auto f = sample(SingularPower{0.25}, Grid1D(0.0, 1.0, 2049));
  const auto hs = dyadic(1, 8);
  const auto reports = check_integral_bound(f, 0.75, 2.0, hs, IntegralBoundVariant::global_lp);
  // Smallest h first; ratio ~ h^{1/p - beta} shrinks as h does.
  CHECK(reports[0].ratio < reports[hs.size() - 1].ratio);
  CHECK_THROWS_AS(check_integral_bound(f, 0.75, 2.0, std::vector<double>{1.5}, IntegralBoundVariant::global_lp),
                  std::domain_error);
  CHECK_THROWS_AS(check_integral_bound(f, 0.25, 2.0, hs, IntegralBoundVariant::global_lp), std::domain_error);
}

TEST_CASE("derivative bound needs f(0) = 0 and flags divergence") {
  const Grid1D grid(0.0, 1.0, 1025);
  const auto hs = dyadic(2, 6);
  CHECK_THROWS_AS(check_derivative_bound(sample(Constant{1.0}, grid), 0.5, hs), std::domain_error);
  const auto reports = check_derivative_bound(sample(Power{0.3}, grid), 0.5, hs);
  for (const auto& r : reports) {
    CHECK(std::isinf(r.rhs));
    CHECK(r.notes.find("skipped") != std::string::npos);
  }
}

TEST_CASE("K_D curve matches the Gamma ratio") {
  const double betas[] = {0.6, 0.8, 1.0};
  const auto curve = lower_bound_kd(0.5, betas, 2048, 0.25);
  CHECK(curve.points[1].closed_normalized == doctest::Approx(0.311336216819181390).epsilon(1e-12));
  for (const auto& pt : curve.points) {
    CHECK(pt.measured == doctest::Approx(oracle::kd_ratio(0.5, pt.beta)).epsilon(0.02));
  }
  CHECK(curve.increasing);
  CHECK(curve.sup_beta == 1.0);
  CHECK(curve.matching_reading == "normalized");
}

TEST_CASE("scaling is exact on the rescaled grid and approximate when resampled") {
  Rng rng(29);
  const Grid1D grid(0.0, 1.0, 1025);
  const auto rho = random_piecewise_linear(grid, 5, 2.0, rng);
  const auto exact = check_scaling(rho, 0.5, 2.0, 2.0, ScalingGrid::rescaled);
  CHECK(exact.pass);
  CHECK(exact.params.at("commutation_discrepancy") < 1e-12);
  const auto aligned = check_scaling(rho, 0.5, 2.0, 4.0, ScalingGrid::resampled);
  CHECK(aligned.notes.find("aligned") != std::string::npos);
  const auto off = check_scaling(rho, 0.5, 1.37, 2.0, ScalingGrid::resampled);
  CHECK(off.notes.find("warning") != std::string::npos);
  CHECK(off.rhs == 1e-3);
}

TEST_CASE("Riesz bound reports carry the proxy ratio") {
  const GridFunctionND f = sample_box({Axis{-2.0, 2.0, 1025}}, [](double x, double) { return std::abs(x) < 1.0 ? 1.0 : 0.0; });
  const auto hs = dyadic(3, 7);
  const auto reports = check_riesz_bound(f, 0.75, 4.0, hs, 2.0);
  for (const auto& r : reports) {
    CHECK(r.params.at("kr_sample") == doctest::Approx(2.0 * r.ratio));
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(check_riesz_bound(f, 0.75, 1.2, hs), std::domain_error);
  CHECK_THROWS_AS(check_riesz_orlicz_bound(f, 0.75, OrliczParams(2.0, 1.0), std::vector<double>{0.5}), std::domain_error);
}

TEST_CASE("GLS bound with degenerate psi reduces to the Riesz bound") {
  const GridFunctionND f = sample_box({Axis{-2.0, 2.0, 1025}}, [](double x, double) { return std::abs(x) < 1.0 ? 1.0 : 0.0; });
  const double alpha = 0.75;
  const double r = 3.0;
  const auto hs = dyadic(3, 7);
  GlsOptions options;
  options.p_grid = {2.0, r, 5.0};
  // psi_(r) scaled by the weighted norm so nu(r) = bracket * |f|_{alpha,d,r}.
  const auto psi = PsiFunction::degenerate(r, 1.5, 10.0).multiplied([&](double) { return weighted_norm(f, alpha, r); });
  const auto nu_gls = check_gls_bounds(f, alpha, hs, GlsBound::fundamental, options, &psi);
  const auto riesz = check_riesz_bound(f, alpha, r, hs);
  for (std::size_t k = 0; k < hs.size(); ++k) {
    CHECK(nu_gls[k].lhs == riesz[k].lhs);
    CHECK(nu_gls[k].rhs == doctest::Approx(riesz[k].rhs).epsilon(1e-12));
  }
}

TEST_CASE("GLS log variants require h below 1/e") {
  const GridFunctionND f = sample_box({Axis{-2.0, 2.0, 257}}, [](double x, double) { return std::abs(x) < 1.0 ? 1.0 : 0.0; });
  GlsOptions options;
  CHECK_THROWS_AS(check_gls_bounds(f, 0.75, std::vector<double>{0.5}, GlsBound::orlicz_log, options), std::domain_error);
  const auto reports = check_gls_bounds(f, 0.75, dyadic(3, 6), GlsBound::log_moment, options);
  CHECK(reports.size() == 4);
  for (const auto& r : reports) CHECK(std::isfinite(r.rhs));
}

}  // TEST_SUITE
