#include "fracmod/grid.hpp"

#include <cmath>
#include <string>
#include <type_traits>

namespace fracmod {

namespace {

void check_axis(double a, double b, std::size_t n) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::domain_error("grid: need finite a < b");
  }
  if (n < 2) throw std::domain_error("grid: need at least 2 points");
}

void check_finite(std::span<const double> v) {
  for (double s : v) {
    if (!std::isfinite(s)) throw std::domain_error("grid function: non-finite sample");
  }
}

}  // namespace

Grid1D::Grid1D(double a, double b, std::size_t n) : a_(a), b_(b), n_(n), step_(0.0) {
  check_axis(a, b, n);
  step_ = (b - a) / static_cast<double>(n - 1);
}

GridFunction::GridFunction(Grid1D grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.n()) {
    throw std::domain_error("grid function: sample count " + std::to_string(samples_.size()) +
                            " does not match grid size " + std::to_string(grid_.n()));
  }
  check_finite(samples_);
}

double GridFunction::evaluate(double x) const {
  if (!(x >= grid_.a()) || !(x <= grid_.b())) return 0.0;
  double s = (x - grid_.a()) / grid_.step();
  const double nearest = std::round(s);
  if (std::abs(s - nearest) <= 1e-12 * (1.0 + nearest)) s = nearest;
  auto i = static_cast<std::size_t>(std::floor(s));
  if (i + 1 >= samples_.size()) return samples_.back();
  const double t = s - static_cast<double>(i);
  if (t == 0.0) return samples_[i];
  return samples_[i] + t * (samples_[i + 1] - samples_[i]);
}

GridFunction GridFunction::scaled(double c) const {
  std::vector<double> v(samples_.begin(), samples_.end());
  for (double& s : v) s *= c;
  return {grid_, std::move(v)};
}

GridFunctionND::GridFunctionND(std::vector<Axis> axes, std::vector<double> samples)
    : axes_(std::move(axes)), samples_(std::move(samples)) {
  if (axes_.empty() || axes_.size() > 2) throw std::domain_error("grid function: dim must be 1 or 2");
  std::size_t total = 1;
  for (const auto& ax : axes_) {
    check_axis(ax.a, ax.b, ax.n);
    total *= ax.n;
  }
  if (samples_.size() != total) throw std::domain_error("grid function: sample count mismatch");
  check_finite(samples_);
}

GridFunctionND::GridFunctionND(const GridFunction& f)
    : GridFunctionND({Axis{f.grid().a(), f.grid().b(), f.grid().n()}},
                     std::vector<double>(f.samples().begin(), f.samples().end())) {}

std::array<double, 2> GridFunctionND::coords(std::size_t k) const {
  if (axes_.size() == 1) return {axes_[0].point(k), 0.0};
  const std::size_t ny = axes_[1].n;
  return {axes_[0].point(k / ny), axes_[1].point(k % ny)};
}

double GridFunctionND::weight(std::size_t k) const {
  if (axes_.size() == 1) {
    const double h = axes_[0].step();
    return (k == 0 || k + 1 == axes_[0].n) ? 0.5 * h : h;
  }
  return axes_[0].step() * axes_[1].step();
}

GridFunctionND GridFunctionND::scaled(double c) const {
  std::vector<double> v(samples_.begin(), samples_.end());
  for (double& s : v) s *= c;
  return {axes_, std::move(v)};
}

GridFunction GridFunctionND::as_1d() const {
  if (axes_.size() != 1) throw std::domain_error("grid function: not one-dimensional");
  return {Grid1D(axes_[0].a, axes_[0].b, axes_[0].n),
          std::vector<double>(samples_.begin(), samples_.end())};
}

void validate(const ClosedFormFunction& f) {
  std::visit(
      [](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Power>) {
          if (!(g.beta > 0.0)) throw std::domain_error("power: beta must be > 0");
        } else if constexpr (std::is_same_v<T, SingularPower>) {
          if (!(g.beta > 0.0 && g.beta < 1.0))
            throw std::domain_error("singular power: beta must lie in (0,1)");
        } else if constexpr (std::is_same_v<T, Indicator>) {
          if (!(g.c < g.d)) throw std::domain_error("indicator: need c < d");
        } else {
          if (!std::isfinite(g.c)) throw std::domain_error("constant: non-finite value");
        }
      },
      f);
}

double evaluate(const ClosedFormFunction& f, double x) {
  return std::visit(
      [x](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Power>) {
          return x > 0.0 ? std::pow(x, g.beta) : 0.0;
        } else if constexpr (std::is_same_v<T, SingularPower>) {
          return (x > 0.0 && x < 1.0) ? std::pow(x, -g.beta) : 0.0;
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return (x >= g.c && x <= g.d) ? 1.0 : 0.0;
        } else {
          return g.c;
        }
      },
      f);
}

GridFunction sample(const ClosedFormFunction& f, const Grid1D& grid) {
  validate(f);
  std::vector<double> v(grid.n());
  for (std::size_t i = 0; i < grid.n(); ++i) {
    v[i] = evaluate(f, grid.point(i));
    if (!std::isfinite(v[i])) {
      throw SamplingError("sample: non-finite value at x = " + std::to_string(grid.point(i)));
    }
  }
  return {grid, std::move(v)};
}

GridFunction dilate(const GridFunction& f, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::domain_error("dilate: lambda must be > 0");
  const Grid1D& g = f.grid();
  return {Grid1D(g.a() / lambda, g.b() / lambda, g.n()),
          std::vector<double>(f.samples().begin(), f.samples().end())};
}

ResampledDilation dilate_onto(const GridFunction& f, double lambda, const Grid1D& target) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::domain_error("dilate: lambda must be > 0");
  const Grid1D& src = f.grid();
  bool aligned = true;
  std::vector<double> v(target.n());
  for (std::size_t i = 0; i < target.n(); ++i) {
    const double x = lambda * target.point(i);
    const double s = (x - src.a()) / src.step();
    if (x >= src.a() && x <= src.b() && std::abs(s - std::round(s)) > 1e-9) aligned = false;
    v[i] = f.evaluate(x);
  }
  return {GridFunction(target, std::move(v)), aligned};
}

}  // namespace fracmod
