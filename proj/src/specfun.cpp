#include "fracmod/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracmod::specfun {

namespace {

// Lanczos g = 607/128, series c0 + sum_k c_k / (x + k), k = 1..14.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kSqrtTwoPi = 2.5066282746310005024;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(what) +
                            ": argument must be finite and positive, got " +
                            std::to_string(x));
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  double series = kLanczosCoeff[0];
  for (std::size_t k = 1; k < kLanczosCoeff.size(); ++k) {
    series += kLanczosCoeff[k] / (x + static_cast<double>(k));
  }
  const double t = x + kLanczosG + 0.5;
  return (x + 0.5) * std::log(t) - t + std::log(kSqrtTwoPi * series / x);
}

double gamma(double x) {
  const double lg = log_gamma(x);
  const double value = std::exp(lg);
  if (!std::isfinite(value)) {
    throw std::range_error("gamma: overflow at x = " + std::to_string(x));
  }
  return value;
}

double log_beta(double a, double b) {
  require_positive(a, "beta");
  require_positive(b, "beta");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta(double a, double b) {
  // Symmetric by construction: addition in log_beta commutes.
  return std::exp(a <= b ? log_beta(a, b) : log_beta(b, a));
}

}  // namespace fracmod::specfun
