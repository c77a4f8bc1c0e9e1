#include "fracmod/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracmod {

namespace {

constexpr double kPoleGuard = 1e-12;

void require_p(double p, const char* what) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error(std::string(what) + ": p must be >= 1, got " + std::to_string(p));
  }
}

double sum_abs_pow(const GridFunctionND& f, double p) {
  double acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] != 0.0) acc += f.weight(k) * std::pow(std::abs(f[k]), p);
  }
  return acc;
}

}  // namespace

double lp_norm(const GridFunctionND& f, double p) {
  require_p(p, "lp_norm");
  return std::pow(sum_abs_pow(f, p), 1.0 / p);
}

double lp_norm(const GridFunction& f, double p) { return lp_norm(GridFunctionND(f), p); }

double z_constant(double alpha, double p) { return riesz_bracket(alpha, p, 1); }

double riesz_bracket(double alpha, double p, int d) {
  if (!(alpha > 0.0) || !(p > 1.0)) throw std::domain_error("bracket: need alpha > 0 and p > 1");
  const double gap = alpha * p - d;
  if (!(gap > 0.0)) {
    throw std::domain_error("bracket: need p > d/alpha, got alpha=" + std::to_string(alpha) +
                            " p=" + std::to_string(p));
  }
  if (gap < kPoleGuard) throw std::range_error("bracket: p too close to d/alpha");
  return std::pow((p - 1.0) / gap, 1.0 - 1.0 / p);
}

LocalMass::LocalMass(const GridFunction& f, double p)
    : prefix_(f.size(), 0.0), step_(f.grid().step()), p_(p) {
  require_p(p, "delta_p");
  // prefix_[i] = trapezoid integral of |f|^p over [x_0, x_i]
  double prev = std::pow(std::abs(f[0]), p);
  for (std::size_t i = 1; i < f.size(); ++i) {
    const double cur = std::pow(std::abs(f[i]), p);
    prefix_[i] = prefix_[i - 1] + 0.5 * step_ * (prev + cur);
    prev = cur;
  }
}

double LocalMass::delta(double h) const {
  if (!(h > 0.0)) throw std::domain_error("delta_p: h must be positive");
  const std::size_t n = prefix_.size();
  const auto cells = static_cast<std::size_t>(std::floor(h / step_ + 1e-9));
  if (cells == 0) return 0.0;
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = std::min(n - 1, i + cells);
    best = std::max(best, prefix_[j] - prefix_[i]);
    if (j == n - 1) break;
  }
  return std::pow(best, 1.0 / p_);
}

double delta_p(const GridFunction& f, double h, double p) { return LocalMass(f, p).delta(h); }

double weighted_l1(const GridFunctionND& f, double alpha) {
  const int d = f.dim();
  double acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0.0) continue;
    const auto c = f.coords(k);
    acc += f.weight(k) * std::pow(1.0 + std::hypot(c[0], c[1]), alpha - d) * std::abs(f[k]);
  }
  return acc;
}

double weighted_norm(const GridFunctionND& f, double alpha, double p) {
  const int d = f.dim();
  if (!(alpha > 0.0 && alpha < d)) throw std::domain_error("weighted_norm: alpha must lie in (0,d)");
  if (!(p > d / alpha)) {
    throw std::domain_error("weighted_norm: need p > d/alpha, got p=" + std::to_string(p));
  }
  return std::max(weighted_l1(f, alpha), lp_norm(f, p));
}

OrliczParams::OrliczParams(double p, double gamma) : p_(p), gamma_(gamma) {
  if (!(p > 1.0) || !(gamma > 0.0)) throw std::domain_error("orlicz: need p > 1 and gamma > 0");
}

double young_orlicz(double u, const OrliczParams& params) {
  const double a = std::abs(u);
  if (a > std::numbers::e) return std::pow(a, params.p()) * std::pow(std::log(a), params.gamma());
  return std::exp(params.p() - 2.0) * a * a;
}

double orlicz_modular(const GridFunctionND& f, double lambda, const OrliczParams& params) {
  double acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] != 0.0) acc += f.weight(k) * young_orlicz(f[k] / lambda, params);
  }
  return acc;
}

double luxemburg_norm(const GridFunctionND& f, const OrliczParams& params) {
  double peak = 0.0;
  for (double s : f.samples()) peak = std::max(peak, std::abs(s));
  if (peak == 0.0) return 0.0;
  double hi = peak;
  while (orlicz_modular(f, hi, params) > 1.0) hi *= 2.0;
  double lo = hi;
  do {
    lo *= 0.5;
  } while (orlicz_modular(f, lo, params) <= 1.0 && lo > 0.0);
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (orlicz_modular(f, mid, params) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double orlicz_weighted_norm(const GridFunctionND& f, double alpha, const OrliczParams& params) {
  return luxemburg_norm(f, params) + weighted_l1(f, alpha);
}

double kappa0(const GridFunctionND& f, double p, double gamma) {
  require_p(p, "kappa");
  if (!(gamma >= 0.0)) throw std::domain_error("kappa: gamma must be >= 0");
  double acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double a = std::abs(f[k]);
    if (a == 0.0) continue;
    const double log_plus = std::max(1.0, std::log(a));
    acc += f.weight(k) * std::pow(a, p) * std::pow(log_plus, gamma * p);
  }
  return std::pow(acc, 1.0 / p);
}

double kappa(const GridFunctionND& f, double p, double alpha, double gamma) {
  return std::max(weighted_l1(f, alpha), kappa0(f, p, gamma));
}

}  // namespace fracmod
