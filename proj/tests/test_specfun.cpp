#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "fracmod/random.hpp"
#include "fracmod/specfun.hpp"

using namespace fracmod;

TEST_SUITE("specfun") {

TEST_CASE("log_gamma against high-precision values") {
  // mpmath at 30 digits
  CHECK(specfun::log_gamma(1e-3) == doctest::Approx(6.90717888538385368).epsilon(1e-13));
  CHECK(specfun::log_gamma(170.5) == doctest::Approx(704.004427734204671).epsilon(1e-13));
  CHECK(specfun::log_gamma(0.3) == doctest::Approx(1.09579799481807552).epsilon(1e-13));
  CHECK(specfun::log_gamma(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(specfun::log_gamma(2.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("gamma values") {
  CHECK(specfun::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(specfun::gamma(0.3) == doctest::Approx(2.99156898768759063).epsilon(1e-13));
  CHECK(specfun::gamma(4.5) == doctest::Approx(11.6317283965674489).epsilon(1e-13));
  CHECK(specfun::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK_THROWS_AS(specfun::gamma(200.0), std::range_error);
}

TEST_CASE("beta values and symmetry") {
  CHECK(specfun::beta(2.0, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(specfun::beta(0.3, 2.7) == doctest::Approx(2.31051713608330523).epsilon(1e-13));
  CHECK(specfun::log_beta(50.0, 60.0) == doctest::Approx(-76.5227233533505127).epsilon(1e-13));
  CHECK(specfun::beta(0.7, 1.9) == specfun::beta(1.9, 0.7));
}

TEST_CASE("recurrence and agreement with the C library on a seeded sweep") {
  Rng rng(7);
  for (int k = 0; k < 500; ++k) {
    const double x = rng.uniform(1e-3, 160.0);
    CHECK(specfun::log_gamma(x + 1.0) - specfun::log_gamma(x) ==
          doctest::Approx(std::log(x)).scale(1.0).epsilon(1e-11));
    CHECK(specfun::log_gamma(x) == doctest::Approx(std::lgamma(x)).scale(1.0).epsilon(1e-12));
  }
}

}  // TEST_SUITE
