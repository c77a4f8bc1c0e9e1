#pragma once

/**
 * @file gls.hpp
 * @brief Grand Lebesgue Space machinery: psi-functions, the G(psi) norm,
 * the fundamental function and the derived psi-functions nu / zeta.
 *
 * Every sup over p in (A, B) is evaluated on a finite p grid, so results
 * are lower bounds of the true sup. GridSup reports the widest gap of the
 * grid alongside the value.
 */

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracmod/grid.hpp"

namespace fracmod {

class PsiError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A positive function on its support; +inf outside.
///
/// Three shapes exist: analytic (open support (A, B)), tabulated (closed
/// support [p_0, p_last], linear interpolation between nodes) and the
/// degenerate psi_(r), finite only at p = r.
class PsiFunction {
 public:
  static PsiFunction analytic(double A, double B, std::function<double(double)> fn);
  static PsiFunction tabulated(std::vector<double> p_grid, std::vector<double> values);
  static PsiFunction degenerate(double r, double A, double B);

  double A() const { return A_; }
  double B() const { return B_; }
  bool closed() const { return closed_; }
  bool is_degenerate() const { return point_.has_value(); }
  double point() const { return point_.value_or(std::numeric_limits<double>::quiet_NaN()); }
  bool in_support(double p) const;
  double operator()(double p) const;

  /// Tabulation nodes (empty unless tabulated).
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> node_values() const { return node_values_; }

  /// Pointwise product with a positive multiplier on the same support.
  PsiFunction multiplied(std::function<double(double)> factor) const;

 private:
  PsiFunction() = default;
  void check_positive() const;

  double A_ = 1.0;
  double B_ = std::numeric_limits<double>::infinity();
  bool closed_ = false;
  std::optional<double> point_;
  std::function<double(double)> fn_;
  std::vector<double> nodes_;
  std::vector<double> node_values_;
};

/// Result of a sup over a finite p grid.
struct GridSup {
  double value = 0.0;
  double argmax_p = std::numeric_limits<double>::quiet_NaN();
  double max_gap = 0.0;
};

/// `count` log-spaced points strictly inside (A, B). An infinite B is
/// replaced by A + 64.
std::vector<double> default_p_grid(double A, double B, std::size_t count = 64);

/// max over the grid of norm_of_p(p) / psi(p) (terms with psi = inf count 0).
GridSup gls_norm(const std::function<double(double)>& norm_of_p, const PsiFunction& psi,
                 std::span<const double> p_grid);
GridSup gls_norm(const GridFunctionND& f, const PsiFunction& psi, std::span<const double> p_grid);

/// max over the grid of delta^{1/p} / psi(p).
GridSup fundamental_function(const PsiFunction& psi, double delta, std::span<const double> p_grid);

/// psi(p) = |f|_{alpha,d,p} tabulated on p_grid. Every p must exceed d/alpha.
PsiFunction psi_from_function(const GridFunctionND& f, double alpha, std::span<const double> p_grid);

/// Tabulates an arbitrary p -> value map (e.g. theta or kappa) as a psi-function.
PsiFunction psi_from_values(std::span<const double> p_grid, const std::function<double(double)>& value_of_p);

/// nu(p) = psi(p) * K_R * [(p-1)/(alpha p - d)]^{1-1/p}.
PsiFunction nu_builder(const PsiFunction& psi, double alpha, int d, double kr_proxy = 1.0);

}  // namespace fracmod
