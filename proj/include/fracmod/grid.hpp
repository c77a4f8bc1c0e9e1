#pragma once

/**
 * @file grid.hpp
 * @brief Uniformly sampled functions and the closed-form test families.
 *
 * A GridFunction holds samples f(x_i) at x_i = a + i * step, i = 0..n-1.
 * Between samples functions are read as their piecewise-linear interpolant
 * and outside [a, b] as zero.
 */

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace fracmod {

/// Raised when a closed-form function evaluates to a non-finite value.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform 1-D grid; a < b and n >= 2.
class Grid1D {
 public:
  Grid1D(double a, double b, std::size_t n);

  double a() const { return a_; }
  double b() const { return b_; }
  std::size_t n() const { return n_; }
  double step() const { return step_; }
  double point(std::size_t i) const {
    return i + 1 == n_ ? b_ : a_ + static_cast<double>(i) * step_;
  }

  bool operator==(const Grid1D&) const = default;

 private:
  double a_;
  double b_;
  std::size_t n_;
  double step_;
};

class GridFunction {
 public:
  GridFunction(Grid1D grid, std::vector<double> samples);

  const Grid1D& grid() const { return grid_; }
  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }
  double x(std::size_t i) const { return grid_.point(i); }

  /// Piecewise-linear read-out; zero outside [a, b].
  double evaluate(double x) const;

  GridFunction scaled(double c) const;

 private:
  Grid1D grid_;
  std::vector<double> samples_;
};

/// Zero extension of a GridFunction to the whole real line.
class ZeroExtended {
 public:
  explicit ZeroExtended(const GridFunction& f) : f_(&f) {}
  double operator()(double x) const { return f_->evaluate(x); }

 private:
  const GridFunction* f_;
};

inline ZeroExtended zero_extend(const GridFunction& f) { return ZeroExtended(f); }

/// One axis of a box grid. Same point layout as Grid1D.
struct Axis {
  double a = 0.0;
  double b = 1.0;
  std::size_t n = 2;

  double step() const { return (b - a) / static_cast<double>(n - 1); }
  double point(std::size_t i) const {
    return i + 1 == n ? b : a + static_cast<double>(i) * step();
  }
  bool operator==(const Axis&) const = default;
};

/// Samples on a 1-D interval or 2-D box, row-major (last axis fastest).
///
/// In 2-D each sample stands for the cell of size step_x * step_y centred
/// on it (midpoint rule); in 1-D integrals use the trapezoid rule.
class GridFunctionND {
 public:
  GridFunctionND(std::vector<Axis> axes, std::vector<double> samples);
  explicit GridFunctionND(const GridFunction& f);

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<Axis>& axes() const { return axes_; }
  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double operator[](std::size_t k) const { return samples_[k]; }
  double at(std::size_t i, std::size_t j) const { return samples_[i * axes_[1].n + j]; }

  /// Coordinates of the k-th sample (row-major index).
  std::array<double, 2> coords(std::size_t k) const;

  /// Quadrature weight of sample k (trapezoid in 1-D, cell area in 2-D).
  double weight(std::size_t k) const;

  GridFunctionND scaled(double c) const;

  /// Only valid for dim() == 1.
  GridFunction as_1d() const;

 private:
  std::vector<Axis> axes_;
  std::vector<double> samples_;
};

/// x^beta on (0, inf), beta > 0. Zero for x <= 0.
struct Power {
  double beta;
};
/// x^-beta * 1{x in (0,1)}, 0 < beta < 1. The value at x = 0 is taken as 0.
struct SingularPower {
  double beta;
};
/// 1{x in [c, d]}, c < d.
struct Indicator {
  double c;
  double d;
};
struct Constant {
  double c;
};

using ClosedFormFunction = std::variant<Power, SingularPower, Indicator, Constant>;

/// Throws std::domain_error when the parameters leave the admissible set.
void validate(const ClosedFormFunction& f);

double evaluate(const ClosedFormFunction& f, double x);

/// Samples f at every grid point. Throws SamplingError on non-finite values.
GridFunction sample(const ClosedFormFunction& f, const Grid1D& grid);

/// Samples on a box (1-D or 2-D) of a callable of the coordinates.
template <typename Fn>
GridFunctionND sample_box(const std::vector<Axis>& axes, Fn&& fn) {
  std::size_t total = 1;
  for (const auto& ax : axes) total *= ax.n;
  std::vector<double> values(total);
  if (axes.size() == 1) {
    for (std::size_t i = 0; i < axes[0].n; ++i) values[i] = fn(axes[0].point(i), 0.0);
  } else {
    for (std::size_t i = 0; i < axes[0].n; ++i)
      for (std::size_t j = 0; j < axes[1].n; ++j)
        values[i * axes[1].n + j] = fn(axes[0].point(i), axes[1].point(j));
  }
  return GridFunctionND(axes, std::move(values));
}

/// T_lambda f(x) = f(lambda x), returned on the grid (a/lambda, b/lambda, n).
/// The samples carry over unchanged, so the dilation is exact.
GridFunction dilate(const GridFunction& f, double lambda);

/// T_lambda f read onto an arbitrary target grid by zero-extended linear
/// interpolation. `aligned` reports whether every lambda * x_i hit a source
/// sample (to 1e-9 of a step), in which case no interpolation happened.
struct ResampledDilation {
  GridFunction values;
  bool aligned;
};
ResampledDilation dilate_onto(const GridFunction& f, double lambda, const Grid1D& target);

}  // namespace fracmod
