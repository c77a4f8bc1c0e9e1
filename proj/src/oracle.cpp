#include "fracmod/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace fracmod::oracle {

double pair_scan_modulus(std::span<const double> x, std::span<const double> v, double h) {
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (std::abs(x[j] - x[i]) <= h) best = std::max(best, std::abs(v[i] - v[j]));
    }
  }
  return best;
}

double power_integral(double alpha, double beta, double x) {
  return std::exp(std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 1.0)) * std::pow(x, alpha + beta);
}

double power_derivative(double alpha, double beta, double x) {
  return std::exp(std::lgamma(beta + 1.0) - std::lgamma(beta - alpha + 1.0)) * std::pow(x, beta - alpha);
}

double singular_power_integral(double alpha, double beta, double x) {
  const double b = std::tgamma(1.0 - beta) * std::tgamma(alpha) / std::tgamma(1.0 - beta + alpha);
  return b / std::tgamma(alpha) * std::pow(x, alpha - beta);
}

double riesz_unit_indicator(double alpha, double x) {
  // Antiderivative of |x - y|^{a-1} in y, split at y = x.
  const auto part = [alpha](double lo, double hi) {
    return (std::pow(hi, alpha) - std::pow(lo, alpha)) / alpha;
  };
  if (x <= -1.0) return part(-1.0 - x, 1.0 - x);
  if (x >= 1.0) return part(x - 1.0, x + 1.0);
  return part(0.0, x + 1.0) + part(0.0, 1.0 - x);
}

double kd_ratio(double alpha, double beta) {
  return std::exp(std::lgamma(1.0 + beta) - std::lgamma(beta - alpha));
}

}  // namespace fracmod::oracle
