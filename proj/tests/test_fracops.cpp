#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "fracmod/fracops.hpp"
#include "fracmod/oracle.hpp"
#include "fracmod/random.hpp"

using namespace fracmod;

namespace {

double max_rel_error(const GridFunction& g, double x_lo, const std::function<double(double)>& exact) {
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.x(i) < x_lo) continue;
    const double e = exact(g.x(i));
    err = std::max(err, std::abs(g[i] - e) / std::abs(e));
  }
  return err;
}

}  // namespace

TEST_SUITE("fracops") {

TEST_CASE("order must lie in (0,1)") {
  const auto f = sample(Power{1.0}, Grid1D(0.0, 1.0, 65));
  CHECK_THROWS_AS(frac_integral(f, FracOrder(0.0)), std::domain_error);
  CHECK_THROWS_AS(frac_integral(f, FracOrder(1.0)), std::domain_error);
  CHECK_THROWS_AS(frac_derivative(f, FracOrder(-0.5)), std::domain_error);
}

TEST_CASE("integral of the constant one") {
  const auto f = sample(Constant{1.0}, Grid1D(0.0, 1.0, 257));
  const auto g = frac_integral(f, FracOrder(0.5));
  CHECK(g[256] == doctest::Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("linear functions are integrated exactly") {
  const auto f = sample(Power{1.0}, Grid1D(0.0, 1.0, 129));
  for (double alpha : {0.1, 0.5, 0.9}) {
    const auto g = frac_integral(f, FracOrder(alpha));
    CHECK(max_rel_error(g, 1e-3, [&](double x) { return oracle::power_integral(alpha, 1.0, x); }) < 1e-12);
  }
}

TEST_CASE("square root power against the Gamma ratio") {
  const auto f = sample(Power{0.5}, Grid1D(0.0, 1.0, 1025));
  const auto g = frac_integral(f, FracOrder(0.5));
  CHECK(max_rel_error(g, 0.05, [](double x) { return std::sqrt(std::numbers::pi) / 2.0 * x; }) < 1e-3);
}

TEST_CASE("singular power image converges at the first-cell rate") {
  // Sampling x^-b with value 0 at the origin loses O(h^{1-b}) mass in the
  // first cell, which dominates the error away from the origin.
  const auto exact = [](double x) { return oracle::singular_power_integral(0.75, 0.25, x); };
  double err[2];
  for (int k = 0; k < 2; ++k) {
    const auto f = sample(SingularPower{0.25}, Grid1D(0.0, 1.0, (2048u << k) + 1));
    err[k] = max_rel_error(frac_integral(f, FracOrder(0.75)), 0.1, exact);
  }
  CHECK(err[1] < 1e-2);
  CHECK(err[0] / err[1] == doctest::Approx(std::pow(2.0, 0.75)).epsilon(0.1));
}

TEST_CASE("half derivative of x") {
  const auto f = sample(Power{1.0}, Grid1D(0.0, 1.0, 4097));
  const auto d = frac_derivative(f, FracOrder(0.5));
  CHECK(max_rel_error(d, 0.1, [](double x) { return 2.0 * std::sqrt(x / std::numbers::pi); }) < 1e-3);
}

TEST_CASE("frac_image_exact closed forms") {
  const auto p = frac_image_exact(Power{0.5}, FracOrder(0.5), FracKind::integral);
  CHECK(p(0.64) == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0 * 0.64));
  const auto d = frac_image_exact(Power{1.0}, FracOrder(0.5), FracKind::derivative);
  CHECK(d(0.25) == doctest::Approx(2.0 * std::sqrt(0.25 / std::numbers::pi)));
  const auto c = frac_image_exact(Constant{3.0}, FracOrder(0.5), FracKind::derivative);
  CHECK(c(0.25) == doctest::Approx(3.0 / std::sqrt(std::numbers::pi * 0.25)));
  CHECK_THROWS_AS(frac_image_exact(Power{0.25}, FracOrder(0.5), FracKind::derivative), std::domain_error);
  CHECK_THROWS_AS(frac_image_exact(Indicator{0.0, 1.0}, FracOrder(0.5), FracKind::integral), std::domain_error);
}

TEST_CASE("property: integral is linear and positive") {
  Rng rng(11);
  const Grid1D grid(0.0, 1.0, 257);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_samples(grid, rng);
    const auto g = random_samples(grid, rng);
    const double a = rng.uniform(-2.0, 2.0);
    const FracOrder order(rng.uniform(0.05, 0.95));
    std::vector<double> sum(grid.n());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a * f[i] + g[i];
    const auto lhs = frac_integral(GridFunction(grid, sum), order);
    const auto If = frac_integral(f, order);
    const auto Ig = frac_integral(g, order);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      CHECK(lhs[i] == doctest::Approx(a * If[i] + Ig[i]).scale(1.0).epsilon(1e-12));
    }
    std::vector<double> abs_f(grid.n());
    for (std::size_t i = 0; i < abs_f.size(); ++i) abs_f[i] = std::abs(f[i]);
    const auto Ia = frac_integral(GridFunction(grid, abs_f), order);
    for (std::size_t i = 0; i < abs_f.size(); ++i) CHECK(Ia[i] >= 0.0);
  }
}

TEST_CASE("Riesz potential of an indicator in 1-D") {
  // The sampled indicator is read as piecewise linear, so each jump becomes a
  // one-cell ramp. Its contribution bounds the error: about h at the centre
  // and 2 h^a / (a (a + 1)) + 2h next to the jumps.
  const double h = 4.0 / 1024.0;
  for (double alpha : {0.25, 0.5, 0.75}) {
    const GridFunctionND f =
        sample_box({Axis{-2.0, 2.0, 1025}}, [](double x, double) { return std::abs(x) <= 1.0 ? 1.0 : 0.0; });
    const auto r = riesz_potential(f, FracOrder(alpha));
    CHECK(std::abs(r[512] - 2.0 / alpha) <= 2.0 * h);
    double err = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      err = std::max(err, std::abs(r[k] - oracle::riesz_unit_indicator(alpha, r.coords(k)[0])));
    }
    CHECK(err <= 2.0 * std::pow(h, alpha) / (alpha * (alpha + 1.0)) + 2.0 * h);
  }
}

TEST_CASE("Riesz potential in 1-D is exact for piecewise-linear input") {
  // Tent on [-1, 1]: int (1 - |y|) |y|^{a-1} dy = 2 / a - 2 / (a + 1) at the peak.
  const GridFunctionND f =
      sample_box({Axis{-2.0, 2.0, 257}}, [](double x, double) { return std::max(0.0, 1.0 - std::abs(x)); });
  for (double alpha : {0.3, 0.8}) {
    const auto r = riesz_potential(f, FracOrder(alpha));
    CHECK(r[128] == doctest::Approx(2.0 / alpha - 2.0 / (alpha + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("Riesz cell integral against nested quadrature") {
  // mpmath nested tanh-sinh, 30 digits
  CHECK(riesz_cell_integral_2d(0.5, 0.1, 0.2) == doctest::Approx(3.44034144754825647).epsilon(1e-12));
  CHECK(riesz_cell_integral_2d(1.5, 1.0, 1.0) == doctest::Approx(1.76774762678945281).epsilon(1e-12));
  CHECK(riesz_cell_integral_2d(1.0, 0.25, 0.125) == doctest::Approx(0.601514781324504309).epsilon(1e-12));
}

TEST_CASE("Riesz potential of the unit disc at its centre") {
  const double alpha = 1.0;
  const Axis axis{-1.5, 1.5, 121};
  const GridFunctionND f = sample_box({axis, axis}, [](double x, double y) { return std::hypot(x, y) <= 1.0 ? 1.0 : 0.0; });
  const auto r = riesz_potential(f, FracOrder(alpha));
  // int_{|y|<1} |y|^{alpha-2} dy = 2 pi / alpha
  CHECK(r.at(60, 60) == doctest::Approx(2.0 * std::numbers::pi / alpha).epsilon(0.02));
  CHECK_THROWS_AS(riesz_potential(f, FracOrder(2.0)), std::domain_error);
}

TEST_CASE("existence check") {
  const GridFunctionND f = sample_box({Axis{0.0, 1.0, 4097}}, [](double, double) { return 1.0; });
  const auto check = riesz_existence_check(f, FracOrder(0.5));
  CHECK(check.ok);
  CHECK(check.finite_value == doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-7));
}

}  // TEST_SUITE
