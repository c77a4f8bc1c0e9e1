#pragma once

/**
 * @file specfun.hpp
 * @brief Gamma, log-Gamma and Beta on the positive half-line.
 *
 * log_gamma uses the Lanczos approximation with g = 607/128 and 15
 * coefficients (Godfrey's set), giving about 1e-15 relative accuracy for
 * Gamma on (0, 171]. No reflection or analytic continuation is provided.
 */

namespace fracmod::specfun {

/// ln Gamma(x) for finite x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Gamma(x) for x > 0. Throws std::range_error when the result overflows.
double gamma(double x);

/// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) for a, b > 0.
double beta(double a, double b);

}  // namespace fracmod::specfun
