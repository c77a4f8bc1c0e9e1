#include "fracmod/fracops.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

#include "fracmod/norms.hpp"
#include "fracmod/parallel.hpp"
#include "fracmod/specfun.hpp"

namespace fracmod {

namespace {

constexpr std::size_t kSeriesThreshold = 16;

void require_unit_order(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error(std::string(what) + ": alpha must lie in (0,1), got " +
                            std::to_string(alpha));
  }
}

void require_left_anchor(const Grid1D& g, const char* what) {
  if (g.a() != 0.0) throw std::domain_error(std::string(what) + ": grid must start at 0");
}

// (k+1)^s - 2 k^s + (k-1)^s = 2 k^s sum_{m>=1} C(s,2m) k^{-2m}
double second_difference(double s, std::size_t k) {
  const double kd = static_cast<double>(k);
  if (k < kSeriesThreshold) {
    return std::pow(kd + 1.0, s) - 2.0 * std::pow(kd, s) + std::pow(kd - 1.0, s);
  }
  const double u2 = 1.0 / (kd * kd);
  double binom = 1.0;  // C(s, r)
  double power = 1.0;  // u^r
  double sum = 0.0;
  for (int r = 1; r <= 60; ++r) {
    binom *= (s - r + 1) / r;
    if (r % 2 == 1) continue;
    power *= u2;
    const double term = binom * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return 2.0 * std::pow(kd, s) * sum;
}

// (i-1)^s - (i-1-a) i^a with s = a+1, = i^s sum_{m>=2} C(s,m) (-1/i)^m
double endpoint_weight(double a, std::size_t i) {
  const double s = a + 1.0;
  const double id = static_cast<double>(i);
  if (i < kSeriesThreshold) {
    return std::pow(id - 1.0, s) - (id - 1.0 - a) * std::pow(id, a);
  }
  const double u = -1.0 / id;
  double binom = s;  // C(s,1)
  double power = u;
  double sum = 0.0;
  for (int m = 2; m <= 80; ++m) {
    binom *= (s - m + 1) / m;
    power *= u;
    const double term = binom * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return std::pow(id, s) * sum;
}

// sum over hats of int_0^{x_i} (x_i - t)^{order-1} f~(t) dt, without the
// h^order / (order (order+1)) prefactor. `at(j)` reads sample j.
template <typename At>
double left_sum(const detail::ProductWeights& w, std::size_t panels, At&& at) {
  if (panels == 0) return 0.0;
  double acc = w.endpoint[panels] * at(0);
  for (std::size_t k = panels - 1; k >= 1; --k) acc += w.second_diff[k] * at(panels - k);
  return acc + at(panels);
}

}  // namespace

namespace detail {

ProductWeights product_weights(double order, std::size_t count) {
  ProductWeights w;
  w.second_diff.assign(count, 0.0);
  w.endpoint.assign(count, 0.0);
  for (std::size_t k = 1; k < count; ++k) {
    w.second_diff[k] = second_difference(order + 1.0, k);
    w.endpoint[k] = endpoint_weight(order, k);
  }
  return w;
}

}  // namespace detail

GridFunction frac_integral(const GridFunction& f, FracOrder alpha) {
  const double a = alpha.value();
  require_unit_order(a, "frac_integral");
  require_left_anchor(f.grid(), "frac_integral");
  const std::size_t n = f.size();
  const auto w = detail::product_weights(a, n);
  const double scale = std::pow(f.grid().step(), a) / specfun::gamma(a + 2.0);
  std::vector<double> out(n, 0.0);
  const auto samples = f.samples();
  parallel_for(n, [&](std::size_t i) {
    out[i] = scale * left_sum(w, i, [&](std::size_t j) { return samples[j]; });
  });
  return {f.grid(), std::move(out)};
}

GridFunction frac_derivative(const GridFunction& f, FracOrder alpha) {
  const double a = alpha.value();
  require_unit_order(a, "frac_derivative");
  require_left_anchor(f.grid(), "frac_derivative");
  const std::size_t n = f.size();
  if (n < 3) throw std::domain_error("frac_derivative: need at least 3 samples");
  // I^{1-a} f already carries the 1/Gamma(1-a) normalisation.
  const GridFunction j = frac_integral(f, FracOrder(1.0 - a));
  const double h = f.grid().step();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (j[i + 1] - j[i - 1]) / (2.0 * h);
  out[n - 1] = (3.0 * j[n - 1] - 4.0 * j[n - 2] + j[n - 3]) / (2.0 * h);
  return {f.grid(), std::move(out)};
}

double ScaledPower::operator()(double x) const {
  if (!(x > 0.0) || x >= upper) return 0.0;
  return coefficient * std::pow(x, exponent);
}

ScaledPower frac_image_exact(const ClosedFormFunction& f, FracOrder alpha, FracKind which) {
  const double a = alpha.value();
  require_unit_order(a, "frac_image_exact");
  validate(f);
  using specfun::gamma;
  return std::visit(
      [&](const auto& g) -> ScaledPower {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Power>) {
          if (which == FracKind::integral) {
            return {std::exp(specfun::log_gamma(g.beta + 1.0) - specfun::log_gamma(a + g.beta + 1.0)),
                    a + g.beta};
          }
          if (!(g.beta > a)) {
            throw std::domain_error("frac_image_exact: derivative of x^beta needs beta > alpha");
          }
          return {std::exp(specfun::log_gamma(g.beta + 1.0) - specfun::log_gamma(g.beta - a + 1.0)),
                  g.beta - a};
        } else if constexpr (std::is_same_v<T, SingularPower>) {
          if (which == FracKind::derivative) {
            throw std::domain_error("frac_image_exact: no closed-form derivative for singular power");
          }
          return {specfun::beta(1.0 - g.beta, a) / gamma(a), a - g.beta, 1.0};
        } else if constexpr (std::is_same_v<T, Constant>) {
          if (which == FracKind::integral) return {g.c / gamma(a + 1.0), a};
          return {g.c / gamma(1.0 - a), -a};
        } else {
          throw std::domain_error("frac_image_exact: indicator has no closed-form image here");
        }
      },
      f);
}

double riesz_cell_integral_2d(double alpha, double hx, double hy) {
  using boost::math::quadrature::gauss;
  const double ax = 0.5 * hx;
  const double ay = 0.5 * hy;
  const auto sec_pow = [alpha](double t) { return std::pow(std::cos(t), -alpha); };
  // Each quadrant splits along its diagonal into two right triangles.
  const double theta = std::atan2(ay, ax);
  const double t1 = std::pow(ax, alpha) / alpha * gauss<double, 30>::integrate(sec_pow, 0.0, theta);
  const double t2 = std::pow(ay, alpha) / alpha *
                    gauss<double, 30>::integrate(sec_pow, 0.0, std::numbers::pi / 2 - theta);
  return 4.0 * (t1 + t2);
}

GridFunctionND riesz_potential(const GridFunctionND& f, FracOrder alpha) {
  const double a = alpha.value();
  const int d = f.dim();
  if (!(a > 0.0 && a < d)) {
    throw std::domain_error("riesz_potential: alpha must lie in (0,d), got " + std::to_string(a));
  }
  const auto samples = f.samples();
  std::vector<double> out(f.size(), 0.0);

  if (d == 1) {
    const std::size_t n = f.axes()[0].n;
    const auto w = detail::product_weights(a, n);
    const double scale = std::pow(f.axes()[0].step(), a) / (a * (a + 1.0));
    parallel_for(n, [&](std::size_t i) {
      const double left = left_sum(w, i, [&](std::size_t j) { return samples[j]; });
      const double right =
          left_sum(w, n - 1 - i, [&](std::size_t j) { return samples[n - 1 - j]; });
      out[i] = scale * (left + right);
    });
    return {f.axes(), std::move(out)};
  }

  const std::size_t nx = f.axes()[0].n;
  const std::size_t ny = f.axes()[1].n;
  const double hx = f.axes()[0].step();
  const double hy = f.axes()[1].step();
  const double cell = hx * hy;
  // Kernel by absolute index offset; uniform spacing makes it translation invariant.
  std::vector<double> kernel(nx * ny, 0.0);
  for (std::size_t di = 0; di < nx; ++di) {
    for (std::size_t dj = 0; dj < ny; ++dj) {
      if (di == 0 && dj == 0) continue;
      const double r2 = std::pow(di * hx, 2) + std::pow(dj * hy, 2);
      kernel[di * ny + dj] = cell * std::pow(r2, 0.5 * (a - 2.0));
    }
  }
  const double singular = riesz_cell_integral_2d(a, hx, hy);
  parallel_for(nx * ny, [&](std::size_t k) {
    const std::size_t i = k / ny;
    const std::size_t j = k % ny;
    double acc = singular * samples[k];
    for (std::size_t p = 0; p < nx; ++p) {
      const std::size_t di = p > i ? p - i : i - p;
      const double* krow = &kernel[di * ny];
      const double* frow = &samples[p * ny];
      for (std::size_t q = 0; q < ny; ++q) {
        if (p == i && q == j) continue;
        acc += krow[q > j ? q - j : j - q] * frow[q];
      }
    }
    out[k] = acc;
  });
  return {f.axes(), std::move(out)};
}

ExistenceCheck riesz_existence_check(const GridFunctionND& f, FracOrder alpha) {
  const double a = alpha.value();
  if (!(a > 0.0 && a < f.dim())) throw std::domain_error("riesz_existence_check: alpha must lie in (0,d)");
  const double value = weighted_l1(f, a);
  return {value, std::isfinite(value)};
}

}  // namespace fracmod
