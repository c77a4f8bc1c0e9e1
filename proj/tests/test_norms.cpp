#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "fracmod/norms.hpp"
#include "fracmod/random.hpp"

using namespace fracmod;

TEST_SUITE("norms") {

TEST_CASE("lp norm of x on [0,1]") {
  const auto f = sample(Power{1.0}, Grid1D(0.0, 1.0, 2049));
  CHECK(lp_norm(f, 2.0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-6));
  CHECK(lp_norm(f, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(lp_norm(f, 0.5), std::domain_error);
}

TEST_CASE("Z constant") {
  CHECK(z_constant(0.75, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(z_constant(0.5, 4.0) == doctest::Approx(std::pow(3.0, 0.75)).epsilon(1e-14));
  CHECK_THROWS_AS(z_constant(0.5, 2.0), std::domain_error);
  CHECK_THROWS_AS(z_constant(0.5, 2.0 + 1e-14), std::range_error);
  CHECK(riesz_bracket(1.5, 2.0, 2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("local mass") {
  const auto f = sample(Constant{2.0}, Grid1D(0.0, 1.0, 1025));
  CHECK(delta_p(f, 0.25, 2.0) == doctest::Approx(2.0 * 0.5).epsilon(1e-12));
  CHECK(delta_p(f, 5.0, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(delta_p(f, 1e-6, 2.0) == 0.0);
  Rng rng(3);
  const auto g = random_samples(Grid1D(0.0, 1.0, 513), rng);
  double prev = 0.0;
  for (double h = 0.01; h < 1.2; h += 0.01) {
    const double cur = delta_p(g, h, 3.0);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK(prev == doctest::Approx(lp_norm(g, 3.0)).epsilon(1e-12));
}

TEST_CASE("weighted norm") {
  const GridFunctionND f = sample_box({Axis{0.0, 1.0, 4097}}, [](double, double) { return 1.0; });
  CHECK(weighted_l1(f, 0.5) == doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-7));
  CHECK(weighted_norm(f, 0.5, 4.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(weighted_norm(f, 0.5, 2.0), std::domain_error);
}

TEST_CASE("Young-Orlicz function") {
  const OrliczParams params(3.0, 2.0);
  CHECK(young_orlicz(1.0, params) == doctest::Approx(std::numbers::e));
  CHECK(young_orlicz(-1.0, params) == young_orlicz(1.0, params));
  CHECK(young_orlicz(std::exp(2.0), params) == doctest::Approx(std::exp(6.0) * 4.0));
  const double e = std::numbers::e;
  CHECK(young_orlicz(std::nextafter(e, 3.0), params) == doctest::Approx(young_orlicz(e, params)).epsilon(1e-12));
  CHECK_THROWS_AS(OrliczParams(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(OrliczParams(2.0, 0.0), std::domain_error);
}

TEST_CASE("Luxemburg norm of a constant") {
  // c / lambda stays below e, so e^{p-2} (c/lambda)^2 = 1 on the unit interval.
  const GridFunctionND f = sample_box({Axis{0.0, 1.0, 101}}, [](double, double) { return 3.0; });
  const OrliczParams params(2.5, 1.0);
  double mass = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) mass += f.weight(k);
  CHECK(luxemburg_norm(f, params) == doctest::Approx(3.0 * std::exp(0.25) * std::sqrt(mass)).epsilon(1e-11));
  const GridFunctionND zero = f.scaled(0.0);
  CHECK(luxemburg_norm(zero, params) == 0.0);
}

TEST_CASE("property: Luxemburg norm is a gauge") {
  Rng rng(5);
  const Grid1D grid(0.0, 1.0, 257);
  for (int k = 0; k < 20; ++k) {
    const GridFunctionND f(random_samples(grid, rng).scaled(rng.uniform(0.1, 30.0)));
    const OrliczParams params(rng.uniform(1.1, 5.0), rng.uniform(0.1, 3.0));
    const double norm = luxemburg_norm(f, params);
    CHECK(orlicz_modular(f, norm, params) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(luxemburg_norm(f.scaled(2.5), params) == doctest::Approx(2.5 * norm).epsilon(1e-10));
  }
}

TEST_CASE("kappa") {
  const GridFunctionND f = sample_box({Axis{0.0, 1.0, 101}}, [](double, double) { return 2.0; });
  double mass = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) mass += f.weight(k);
  // ln 2 < 1, so ln_+ = 1 and kappa0 reduces to the L_p norm.
  CHECK(kappa0(f, 3.0, 1.0) == doctest::Approx(2.0 * std::cbrt(mass)).epsilon(1e-13));
  const GridFunctionND big = f.scaled(std::exp(2.0) / 2.0);
  CHECK(kappa0(big, 2.0, 0.5) == doctest::Approx(std::exp(2.0) * std::pow(2.0, 0.5) * std::sqrt(mass)).epsilon(1e-13));
}

}  // TEST_SUITE
