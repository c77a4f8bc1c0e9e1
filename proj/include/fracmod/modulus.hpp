#pragma once

/**
 * @file modulus.hpp
 * @brief Modulus of continuity on sampled functions and the singular
 * integral  int_0^h omega(t) t^{-1-alpha} dt.
 *
 * The sup in omega(f, h) = sup_{|x-y| <= h} |f(x) - f(y)| is taken over grid
 * points. For a width of w cells it equals the largest (max - min) over all
 * windows of w + 1 consecutive samples, which two monotone deques give in
 * O(n). For a Holder-beta function the grid quantisation costs at most
 * O(step^beta).
 */

#include <cstddef>
#include <span>
#include <vector>

#include "fracmod/grid.hpp"

namespace fracmod {

/// Number of whole grid cells in a window of width h (h >= 0).
std::size_t window_cells(double h, double step);

/// Largest (max - min) over all runs of `cells + 1` consecutive values.
double window_oscillation(std::span<const double> values, std::size_t cells);

double modulus(const GridFunction& f, double h);

/// omega for a 2-D box function: sup over sample pairs within Euclidean
/// distance h. Costs O(N * r^2) for a window radius of r cells.
double modulus(const GridFunctionND& f, double h);

struct ModulusProfile {
  std::vector<double> h_values;
  std::vector<double> omega_values;
};

/// Evaluates omega at increasing positive h values. The output is forced
/// nondecreasing by a running max (a no-op for exact grid moduli).
ModulusProfile modulus_profile(const GridFunction& f, std::span<const double> h_values);

/// int_0^h omega(t) t^{-1-alpha} dt for 0 < alpha < 1.
///
/// Between profile points omega is interpolated as a power law (exact for
/// omega = C t^kappa). Below the first point the two smallest points define
/// the power law; if its exponent is <= alpha the integral diverges and +inf
/// is returned. h must not exceed the last profile point.
double omega_integral(const ModulusProfile& profile, double alpha, double h);

}  // namespace fracmod
