#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fracmod/modulus.hpp"
#include "fracmod/oracle.hpp"
#include "fracmod/random.hpp"

using namespace fracmod;

TEST_SUITE("modulus") {

TEST_CASE("window oscillation on a short series") {
  const std::vector<double> v{0.0, 3.0, 1.0, -2.0, 5.0};
  CHECK(window_oscillation(v, 0) == 0.0);
  CHECK(window_oscillation(v, 1) == 7.0);
  CHECK(window_oscillation(v, 2) == 7.0);
  CHECK(window_oscillation(v, 10) == 7.0);
  CHECK(window_cells(0.3, 0.1) == 3);
  CHECK(window_cells(0.29, 0.1) == 2);
}

TEST_CASE("modulus of x^b equals h^b on grid-aligned h") {
  const Grid1D g(0.0, 1.0, 1025);
  for (double beta : {0.25, 0.5, 1.0}) {
    const auto f = sample(Power{beta}, g);
    for (int k = 1; k <= 8; ++k) {
      const double h = std::ldexp(1.0, -k);
      CHECK(modulus(f, h) == doctest::Approx(std::pow(h, beta)).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: deque engine matches the pair scan") {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + rng.index(300);
    const Grid1D g(-1.0, 1.0, n);
    const auto f = random_samples(g, rng);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = g.point(i);
    for (int t = 0; t < 5; ++t) {
      const double h = (static_cast<double>(rng.index(n)) + rng.uniform(0.01, 0.99)) * g.step();
      CHECK(modulus(f, h) == oracle::pair_scan_modulus(xs, f.samples(), h));
    }
  }
}

TEST_CASE("2-D modulus") {
  const Axis ax{0.0, 1.0, 33};
  const GridFunctionND f = sample_box({ax, ax}, [](double x, double y) { return x + 2.0 * y; });
  // Steepest pair within distance h runs along (1, 2) / sqrt(5); grid pairs
  // only approximate it, so compare against the axis-aligned lower bound.
  const double h = 0.25;
  CHECK(modulus(f, h) >= 2.0 * h - 1e-12);
  CHECK(modulus(f, h) <= std::sqrt(5.0) * h + 1e-12);
  const GridFunctionND line = sample_box({ax}, [](double x, double) { return 3.0 * x; });
  CHECK(modulus(line, 0.5) == doctest::Approx(1.5));
}

TEST_CASE("profile is monotone and validated") {
  const auto f = sample(Power{0.5}, Grid1D(0.0, 1.0, 257));
  const std::vector<double> hs{0.01, 0.1, 0.5};
  const auto p = modulus_profile(f, hs);
  CHECK(p.omega_values[0] <= p.omega_values[1]);
  CHECK(p.omega_values[1] <= p.omega_values[2]);
  const std::vector<double> bad{0.1, 0.05};
  CHECK_THROWS_AS(modulus_profile(f, bad), std::domain_error);
}

TEST_CASE("omega integral is exact for power-law profiles") {
  ModulusProfile p;
  for (int k = 10; k >= 0; --k) {
    const double h = std::ldexp(1.0, -k);
    p.h_values.push_back(h);
    p.omega_values.push_back(std::pow(h, 0.8));
  }
  // int_0^h t^{0.8 - 1 - 0.5} dt = h^{0.3} / 0.3
  CHECK(omega_integral(p, 0.5, 0.25) == doctest::Approx(std::pow(0.25, 0.3) / 0.3).epsilon(1e-12));
  CHECK(omega_integral(p, 0.5, 0.3) == doctest::Approx(std::pow(0.3, 0.3) / 0.3).epsilon(1e-12));
  CHECK(std::isinf(omega_integral(p, 0.85, 0.25)));
}

}  // TEST_SUITE
