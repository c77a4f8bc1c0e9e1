#include "fracmod/gls.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracmod/norms.hpp"

namespace fracmod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_grid(const PsiFunction& psi, std::span<const double> p_grid) {
  if (p_grid.empty()) throw std::domain_error("gls: empty p grid");
  for (double p : p_grid) {
    if (!psi.in_support(p)) {
      throw std::domain_error("gls: grid point p=" + std::to_string(p) + " outside the support");
    }
  }
}

double widest_gap(std::span<const double> p_grid) {
  std::vector<double> sorted(p_grid.begin(), p_grid.end());
  std::sort(sorted.begin(), sorted.end());
  double gap = 0.0;
  for (std::size_t k = 1; k < sorted.size(); ++k) gap = std::max(gap, sorted[k] - sorted[k - 1]);
  return gap;
}

}  // namespace

PsiFunction PsiFunction::analytic(double A, double B, std::function<double(double)> fn) {
  if (!(A >= 1.0) || !(B > A)) throw PsiError("psi: support needs 1 <= A < B");
  PsiFunction psi;
  psi.A_ = A;
  psi.B_ = B;
  psi.fn_ = std::move(fn);
  psi.check_positive();
  return psi;
}

PsiFunction PsiFunction::tabulated(std::vector<double> p_grid, std::vector<double> values) {
  if (p_grid.size() < 2 || p_grid.size() != values.size()) {
    throw PsiError("psi: tabulation needs >= 2 nodes and matching values");
  }
  for (std::size_t k = 1; k < p_grid.size(); ++k) {
    if (!(p_grid[k] > p_grid[k - 1])) throw PsiError("psi: tabulation nodes must increase");
  }
  if (!(p_grid.front() >= 1.0)) throw PsiError("psi: support must lie in [1, inf)");
  PsiFunction psi;
  psi.A_ = p_grid.front();
  psi.B_ = p_grid.back();
  psi.closed_ = true;
  psi.nodes_ = std::move(p_grid);
  psi.node_values_ = std::move(values);
  psi.fn_ = [nodes = psi.nodes_, vals = psi.node_values_](double p) {
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), p);
    if (it == nodes.end()) return vals.back();
    if (it == nodes.begin()) return vals.front();
    const auto k = static_cast<std::size_t>(it - nodes.begin());
    const double t = (p - nodes[k - 1]) / (nodes[k] - nodes[k - 1]);
    return vals[k - 1] + t * (vals[k] - vals[k - 1]);
  };
  psi.check_positive();
  return psi;
}

PsiFunction PsiFunction::degenerate(double r, double A, double B) {
  if (!(A >= 1.0) || !(B > A) || !(r > A && r < B)) {
    throw PsiError("psi: degenerate point must lie inside (A, B)");
  }
  PsiFunction psi;
  psi.A_ = A;
  psi.B_ = B;
  psi.point_ = r;
  psi.fn_ = [r](double p) { return p == r ? 1.0 : kInf; };
  return psi;
}

bool PsiFunction::in_support(double p) const {
  return closed_ ? (p >= A_ && p <= B_) : (p > A_ && p < B_);
}

double PsiFunction::operator()(double p) const { return in_support(p) ? fn_(p) : kInf; }

void PsiFunction::check_positive() const {
  for (double v : node_values_) {
    if (!(v > 0.0) || !std::isfinite(v)) throw PsiError("psi: tabulated values must be finite and positive");
  }
  // Dense interior sample; the infimum must stay away from zero.
  const double hi = std::isfinite(B_) ? B_ : A_ + 64.0;
  double smallest = kInf;
  for (int k = 0; k < 257; ++k) {
    const double p = A_ + (hi - A_) * (k + 0.5) / 257.0;
    const double v = fn_(p);
    if (!std::isfinite(v) || std::isnan(v)) throw PsiError("psi: non-finite value inside the support");
    smallest = std::min(smallest, v);
  }
  if (!(smallest > 0.0)) throw PsiError("psi: infimum over the support is not positive");
}

PsiFunction PsiFunction::multiplied(std::function<double(double)> factor) const {
  PsiFunction out = *this;
  out.fn_ = [base = fn_, factor = std::move(factor)](double p) {
    const double v = base(p);
    return std::isfinite(v) ? v * factor(p) : v;
  };
  for (std::size_t k = 0; k < out.nodes_.size(); ++k) out.node_values_[k] = out.fn_(out.nodes_[k]);
  if (!out.is_degenerate()) out.check_positive();
  return out;
}

std::vector<double> default_p_grid(double A, double B, std::size_t count) {
  if (!(B > A) || !(A > 0.0) || count == 0) throw std::domain_error("default_p_grid: bad support");
  const double hi = std::isfinite(B) ? B : A + 64.0;
  std::vector<double> grid(count);
  const double la = std::log(A);
  const double lb = std::log(hi);
  for (std::size_t k = 0; k < count; ++k) {
    grid[k] = std::exp(la + (lb - la) * (static_cast<double>(k) + 0.5) / static_cast<double>(count));
  }
  return grid;
}

GridSup gls_norm(const std::function<double(double)>& norm_of_p, const PsiFunction& psi,
                 std::span<const double> p_grid) {
  check_grid(psi, p_grid);
  GridSup out;
  out.max_gap = widest_gap(p_grid);
  for (double p : p_grid) {
    const double w = psi(p);
    if (!std::isfinite(w)) continue;
    const double v = norm_of_p(p) / w;
    if (std::isnan(out.argmax_p) || v > out.value) {
      out.value = v;
      out.argmax_p = p;
    }
  }
  return out;
}

GridSup gls_norm(const GridFunctionND& f, const PsiFunction& psi, std::span<const double> p_grid) {
  return gls_norm([&f](double p) { return lp_norm(f, p); }, psi, p_grid);
}

GridSup fundamental_function(const PsiFunction& psi, double delta, std::span<const double> p_grid) {
  if (!(delta > 0.0)) throw std::domain_error("fundamental_function: delta must be positive");
  return gls_norm([delta](double p) { return std::pow(delta, 1.0 / p); }, psi, p_grid);
}

PsiFunction psi_from_values(std::span<const double> p_grid, const std::function<double(double)>& value_of_p) {
  std::vector<double> nodes(p_grid.begin(), p_grid.end());
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> values;
  values.reserve(nodes.size());
  for (double p : nodes) values.push_back(value_of_p(p));
  return PsiFunction::tabulated(std::move(nodes), std::move(values));
}

PsiFunction psi_from_function(const GridFunctionND& f, double alpha, std::span<const double> p_grid) {
  const double threshold = f.dim() / alpha;
  for (double p : p_grid) {
    if (!(p > threshold)) throw std::domain_error("psi_from_function: every p must exceed d/alpha");
  }
  return psi_from_values(p_grid, [&](double p) { return weighted_norm(f, alpha, p); });
}

PsiFunction nu_builder(const PsiFunction& psi, double alpha, int d, double kr_proxy) {
  if (!(kr_proxy > 0.0) || !std::isfinite(kr_proxy)) throw std::domain_error("nu_builder: K_R proxy must be positive");
  if (!(alpha > 0.0 && alpha < d)) throw std::domain_error("nu_builder: alpha must lie in (0,d)");
  const double threshold = d / alpha;
  const bool ok = psi.is_degenerate() ? psi.point() > threshold
                                      : (psi.closed() ? psi.A() > threshold : psi.A() >= threshold);
  if (!ok) throw std::domain_error("nu_builder: support must lie in (d/alpha, inf)");
  return psi.multiplied([=](double p) { return kr_proxy * riesz_bracket(alpha, p, d); });
}

}  // namespace fracmod
