#pragma once

/**
 * @file fracops.hpp
 * @brief Riemann-Liouville integral/derivative and the Riesz potential.
 *
 * All quadratures are product integration: the sampled function is replaced
 * by its piecewise-linear interpolant and the singular kernel is integrated
 * against each hat function in closed form. For a left-anchored grid with
 * step h the weight of sample j at output i depends only on k = i - j:
 *
 *     int_0^{x_i} (x_i - t)^{a-1} f(t) dt
 *       ~= h^a / (a (a+1)) * [ f_i + sum_{k=1}^{i-1} D2(k) f_{i-k} + E(i) f_0 ]
 *
 * with D2(k) = (k+1)^{a+1} - 2 k^{a+1} + (k-1)^{a+1} and
 * E(i) = (i-1)^{a+1} - (i-1-a) i^a. Both suffer cancellation for large k, so
 * they are evaluated from their binomial series once k >= 16.
 */

#include <cstddef>
#include <limits>
#include <vector>

#include "fracmod/grid.hpp"

namespace fracmod {

/// Order of a fractional operator. Range checks happen at each use site:
/// (0,1) for the Riemann-Liouville pair, (0,d) for the Riesz potential.
class FracOrder {
 public:
  explicit FracOrder(double alpha) : alpha_(alpha) {}
  double value() const { return alpha_; }

 private:
  double alpha_;
};

namespace detail {

/// Tabulated D2(k), k = 0..count-1 (D2(0) unused), and E(i), i = 0..count-1.
struct ProductWeights {
  std::vector<double> second_diff;
  std::vector<double> endpoint;
};
ProductWeights product_weights(double order, std::size_t count);

}  // namespace detail

/// I^alpha f on the same grid. Requires a = 0 and 0 < alpha < 1. O(n^2).
GridFunction frac_integral(const GridFunction& f, FracOrder alpha);

/// D^alpha f = d/dx I^{1-alpha} f, differentiated by central differences
/// (second-order one-sided at the right end). The x = 0 sample is 0.
GridFunction frac_derivative(const GridFunction& f, FracOrder alpha);

enum class FracKind { integral, derivative };

/// coefficient * x^exponent on (0, upper); zero beyond `upper`.
struct ScaledPower {
  double coefficient;
  double exponent;
  double upper = std::numeric_limits<double>::infinity();

  double operator()(double x) const;
};

/// Closed-form fractional image of Power, SingularPower (integral only) and
/// Constant. Power needs beta > alpha for the derivative.
ScaledPower frac_image_exact(const ClosedFormFunction& f, FracOrder alpha, FracKind which);

/// R_alpha f(x) = int f(y) |x - y|^{alpha - d} dy on the sample grid of f,
/// with f zero outside its box. 0 < alpha < d.
GridFunctionND riesz_potential(const GridFunctionND& f, FracOrder alpha);

/// Integral of |x|^{alpha-2} over the centred cell [-hx/2,hx/2] x [-hy/2,hy/2].
double riesz_cell_integral_2d(double alpha, double hx, double hy);

struct ExistenceCheck {
  double finite_value;
  bool ok;
};

/// int (1 + |y|)^{alpha - d} |f(y)| dy over the box of f.
ExistenceCheck riesz_existence_check(const GridFunctionND& f, FracOrder alpha);

}  // namespace fracmod
