#include "fracmod/random.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fracmod/norms.hpp"

namespace fracmod {

GridFunction random_piecewise_linear(const Grid1D& grid, std::size_t knots, double p, Rng& rng) {
  std::vector<double> xs{grid.a(), grid.b()};
  for (std::size_t k = 0; k < knots; ++k) xs.push_back(rng.uniform(grid.a(), grid.b()));
  std::sort(xs.begin(), xs.end());
  std::vector<double> ys(xs.size());
  for (double& y : ys) y = rng.uniform(-1.0, 1.0);

  std::vector<double> v(grid.n());
  std::size_t seg = 0;
  for (std::size_t i = 0; i < grid.n(); ++i) {
    const double x = grid.point(i);
    while (seg + 2 < xs.size() && x > xs[seg + 1]) ++seg;
    const double span = xs[seg + 1] - xs[seg];
    const double t = span > 0.0 ? std::clamp((x - xs[seg]) / span, 0.0, 1.0) : 0.0;
    v[i] = ys[seg] + t * (ys[seg + 1] - ys[seg]);
  }
  GridFunction f(grid, std::move(v));
  const double norm = lp_norm(f, p);
  return norm > 0.0 ? f.scaled(1.0 / norm) : f;
}

GridFunction random_smooth(const Grid1D& grid, Rng& rng) {
  double poly[4];
  double trig[3];
  for (double& c : poly) c = rng.uniform(-1.0, 1.0);
  for (double& c : trig) c = rng.uniform(-1.0, 1.0);
  std::vector<double> v(grid.n());
  for (std::size_t i = 0; i < grid.n(); ++i) {
    const double x = grid.point(i);
    double s = 0.0;
    double xp = x;
    for (double c : poly) {
      s += c * xp;
      xp *= x;
    }
    for (int k = 0; k < 3; ++k) s += trig[k] * std::sin((k + 1) * x);
    v[i] = s;
  }
  return {grid, std::move(v)};
}

GridFunction random_samples(const Grid1D& grid, Rng& rng) {
  std::vector<double> v(grid.n());
  for (double& s : v) s = rng.uniform(-1.0, 1.0);
  return {grid, std::move(v)};
}

}  // namespace fracmod
