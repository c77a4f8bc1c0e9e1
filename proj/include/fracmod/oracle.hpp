#pragma once

/**
 * @file oracle.hpp
 * @brief Reference values computed independently of the numerical paths
 * they check: brute-force scans and closed forms evaluated with the C
 * library's Gamma functions rather than fracmod::specfun.
 */

#include <cstddef>
#include <span>

namespace fracmod::oracle {

/// sup |v_i - v_j| over all pairs with |x_i - x_j| <= h. O(n^2).
double pair_scan_modulus(std::span<const double> x, std::span<const double> v, double h);

/// I^a[x^b](x) = Gamma(b+1)/Gamma(a+b+1) x^{a+b}.
double power_integral(double alpha, double beta, double x);

/// D^a[x^b](x) = Gamma(b+1)/Gamma(b-a+1) x^{b-a}.
double power_derivative(double alpha, double beta, double x);

/// I^a[x^{-b} 1_(0,1)](x) = B(1-b, a)/Gamma(a) x^{a-b} on (0, 1).
double singular_power_integral(double alpha, double beta, double x);

/// int_{-1}^{1} |x - y|^{a-1} dy (Riesz potential of 1_[-1,1] in 1-D).
double riesz_unit_indicator(double alpha, double x);

/// Gamma(1+b) / Gamma(b-a).
double kd_ratio(double alpha, double beta);

}  // namespace fracmod::oracle
