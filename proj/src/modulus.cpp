#include "fracmod/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace fracmod {

namespace {

// int_{t0}^{t1} omega(t) t^{-1-alpha} dt for the interpolant through
// (t0, w0), (t1, w1): power law when both are positive, linear from zero
// otherwise.
double segment_integral(double t0, double w0, double t1, double w1, double alpha) {
  if (w1 == 0.0 && w0 == 0.0) return 0.0;
  if (w0 == 0.0) {
    const auto anti = [&](double t) {
      return std::pow(t, 1.0 - alpha) / (1.0 - alpha) + t0 * std::pow(t, -alpha) / alpha;
    };
    return w1 / (t1 - t0) * (anti(t1) - anti(t0));
  }
  const double ratio = t1 / t0;
  const double kappa = std::log(w1 / w0) / std::log(ratio);
  const double e = kappa - alpha;
  const double base = w0 * std::pow(t0, -alpha);
  if (std::abs(e) < 1e-12) return base * std::log(ratio);
  return base * std::expm1(e * std::log(ratio)) / e;
}

double interpolate(double t0, double w0, double t1, double w1, double t) {
  if (w0 == 0.0) return w1 * (t - t0) / (t1 - t0);
  const double kappa = std::log(w1 / w0) / std::log(t1 / t0);
  return w0 * std::pow(t / t0, kappa);
}

}  // namespace

std::size_t window_cells(double h, double step) {
  if (!(h >= 0.0)) throw std::domain_error("modulus: h must be non-negative");
  return static_cast<std::size_t>(std::floor(h / step + 1e-9));
}

double window_oscillation(std::span<const double> values, std::size_t cells) {
  const std::size_t n = values.size();
  if (n == 0 || cells == 0) return 0.0;
  if (cells >= n - 1) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
  }
  std::deque<std::size_t> maxq;  // indices, values decreasing
  std::deque<std::size_t> minq;  // indices, values increasing
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    while (!maxq.empty() && values[maxq.back()] <= values[i]) maxq.pop_back();
    while (!minq.empty() && values[minq.back()] >= values[i]) minq.pop_back();
    maxq.push_back(i);
    minq.push_back(i);
    if (i >= cells) {
      const std::size_t start = i - cells;
      while (maxq.front() < start) maxq.pop_front();
      while (minq.front() < start) minq.pop_front();
      best = std::max(best, values[maxq.front()] - values[minq.front()]);
    }
  }
  return best;
}

double modulus(const GridFunction& f, double h) {
  if (!(h > 0.0)) throw std::domain_error("modulus: h must be positive");
  return window_oscillation(f.samples(), window_cells(h, f.grid().step()));
}

double modulus(const GridFunctionND& f, double h) {
  if (!(h > 0.0)) throw std::domain_error("modulus: h must be positive");
  if (f.dim() == 1) return modulus(f.as_1d(), h);
  const std::size_t nx = f.axes()[0].n;
  const std::size_t ny = f.axes()[1].n;
  const double hx = f.axes()[0].step();
  const double hy = f.axes()[1].step();
  const double reach = h * h * (1.0 + 1e-12);
  const auto rx = std::min(nx - 1, window_cells(h, hx));
  const auto ry = std::min(ny - 1, window_cells(h, hy));
  // Half-plane of offsets: di > 0, or di == 0 and dj > 0.
  std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> offsets;
  for (std::ptrdiff_t di = 0; di <= static_cast<std::ptrdiff_t>(rx); ++di) {
    for (std::ptrdiff_t dj = -static_cast<std::ptrdiff_t>(ry); dj <= static_cast<std::ptrdiff_t>(ry); ++dj) {
      if (di == 0 && dj <= 0) continue;
      if (std::pow(di * hx, 2) + std::pow(dj * hy, 2) <= reach) offsets.emplace_back(di, dj);
    }
  }
  double best = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double v = f.at(i, j);
      for (const auto& [di, dj] : offsets) {
        const auto ii = static_cast<std::ptrdiff_t>(i) + di;
        const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
        if (ii >= static_cast<std::ptrdiff_t>(nx) || jj < 0 || jj >= static_cast<std::ptrdiff_t>(ny)) continue;
        best = std::max(best, std::abs(v - f.at(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj))));
      }
    }
  }
  return best;
}

ModulusProfile modulus_profile(const GridFunction& f, std::span<const double> h_values) {
  ModulusProfile out;
  out.h_values.assign(h_values.begin(), h_values.end());
  out.omega_values.reserve(h_values.size());
  double running = 0.0;
  for (std::size_t k = 0; k < h_values.size(); ++k) {
    if (k > 0 && !(h_values[k] > h_values[k - 1])) {
      throw std::domain_error("modulus_profile: h values must be strictly increasing");
    }
    running = std::max(running, modulus(f, h_values[k]));
    out.omega_values.push_back(running);
  }
  return out;
}

double omega_integral(const ModulusProfile& profile, double alpha, double h) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("omega_integral: alpha must lie in (0,1)");
  const auto& t = profile.h_values;
  const auto& w = profile.omega_values;
  if (t.size() < 2 || t.size() != w.size()) {
    throw std::domain_error("omega_integral: profile needs at least two points");
  }
  if (!(h > 0.0) || h > t.back() * (1.0 + 1e-12)) {
    throw std::domain_error("omega_integral: h outside the profile range");
  }
  // Tail on (0, min(h, t0)).
  double total = 0.0;
  if (w[0] > 0.0) {
    if (!(w[1] > w[0])) return std::numeric_limits<double>::infinity();
    const double kappa = std::log(w[1] / w[0]) / std::log(t[1] / t[0]);
    if (kappa <= alpha) return std::numeric_limits<double>::infinity();
    const double upto = std::min(h, t[0]);
    total += w[0] * std::pow(t[0], -kappa) * std::pow(upto, kappa - alpha) / (kappa - alpha);
  }
  for (std::size_t k = 0; k + 1 < t.size() && t[k] < h; ++k) {
    if (t[k + 1] <= h) {
      total += segment_integral(t[k], w[k], t[k + 1], w[k + 1], alpha);
    } else {
      const double wh = interpolate(t[k], w[k], t[k + 1], w[k + 1], h);
      total += segment_integral(t[k], w[k], h, wh, alpha);
    }
  }
  return total;
}

}  // namespace fracmod
