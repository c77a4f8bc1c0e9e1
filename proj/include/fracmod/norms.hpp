#pragma once

/**
 * @file norms.hpp
 * @brief Scalar functionals: L_p norms, windowed L_p mass, the Z(alpha,p)
 * constant, the weighted mixed norm, the Young-Orlicz function with its
 * Luxemburg norm, and the kappa functional.
 *
 * Integrals use the trapezoid rule in 1-D and the cell midpoint rule in
 * 2-D (see GridFunctionND::weight).
 */

#include <vector>

#include "fracmod/grid.hpp"

namespace fracmod {

/// (int |f|^p)^{1/p}, p >= 1.
double lp_norm(const GridFunctionND& f, double p);
double lp_norm(const GridFunction& f, double p);

/// [(p-1)/(alpha p - 1)]^{1-1/p}. Domain error when alpha p <= 1; range
/// error when alpha p - 1 falls below 1e-12 (the pole at p = 1/alpha).
double z_constant(double alpha, double p);

/// [(p-1)/(alpha p - d)]^{1-1/p}, the bracket of the Riesz modulus bound.
double riesz_bracket(double alpha, double p, int d);

/// Largest local L_p mass over windows of width h.
///
/// Windows are quantised to floor(h / step) cells (the sup over |delta| < h
/// is a limit, attained by the closed window). Negative offsets integrate
/// over [x + delta, x]; f is zero outside [a, b]. Prefix sums make this O(n).
double delta_p(const GridFunction& f, double h, double p);

/// Prefix sums of |f|^p behind delta_p, reusable across many widths.
class LocalMass {
 public:
  LocalMass(const GridFunction& f, double p);
  /// Delta_p(f, h) for this f and p.
  double delta(double h) const;

 private:
  std::vector<double> prefix_;
  double step_;
  double p_;
};

/// int (1 + |y|)^{alpha - d} |f(y)| dy.
double weighted_l1(const GridFunctionND& f, double alpha);

/// max{ weighted_l1(f, alpha), |f|_p }, requiring 0 < alpha < d and p > d/alpha.
double weighted_norm(const GridFunctionND& f, double alpha, double p);

class OrliczParams {
 public:
  OrliczParams(double p, double gamma);
  double p() const { return p_; }
  double gamma() const { return gamma_; }

 private:
  double p_;
  double gamma_;
};

/// |u|^p (ln|u|)^gamma for |u| > e, e^{p-2} u^2 otherwise.
double young_orlicz(double u, const OrliczParams& params);

/// int Phi(f / lambda).
double orlicz_modular(const GridFunctionND& f, double lambda, const OrliczParams& params);

/// inf{ lambda > 0 : int Phi(f / lambda) <= 1 }, bisection to relative width 1e-12.
double luxemburg_norm(const GridFunctionND& f, const OrliczParams& params);

/// luxemburg_norm(f) + weighted_l1(f, alpha).
double orlicz_weighted_norm(const GridFunctionND& f, double alpha, const OrliczParams& params);

/// (int |f|^p [ln_+ |f|]^{gamma p})^{1/p} with ln_+ z = max(1, ln z).
double kappa0(const GridFunctionND& f, double p, double gamma);

/// max{ weighted_l1(f, alpha), kappa0(f, p, gamma) }.
double kappa(const GridFunctionND& f, double p, double alpha, double gamma);

}  // namespace fracmod
