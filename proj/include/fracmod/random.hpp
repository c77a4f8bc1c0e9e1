#pragma once

#include <cstdint>
#include <random>

#include "fracmod/grid.hpp"

namespace fracmod {

/// Seeded generator with a platform-independent uniform draw
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t count) { return static_cast<std::size_t>(engine_() % count); }

 private:
  std::mt19937_64 engine_;
};

/// Piecewise-linear function through `knots` random values in [-1, 1] at
/// random interior abscissae, rescaled to unit L_p norm.
GridFunction random_piecewise_linear(const Grid1D& grid, std::size_t knots, double p, Rng& rng);

/// Smooth function with f(0) = 0: a random mix of x^k and sin(k x) terms.
GridFunction random_smooth(const Grid1D& grid, Rng& rng);

/// Arbitrary samples in [-1, 1] (no regularity).
GridFunction random_samples(const Grid1D& grid, Rng& rng);

}  // namespace fracmod
