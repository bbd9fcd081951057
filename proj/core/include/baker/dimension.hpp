#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "baker/measures.hpp"
#include "baker/params.hpp"
#include "baker/point_set.hpp"

namespace baker {

struct MoranResult {
  double d = 0.0;
  double residual = 0.0;  // beta1^d + beta2^d - 1
};

/// Root of beta1^d + beta2^d = 1. Throws RegimeError unless beta1 + beta2 < 1.
MoranResult moran_exponent(const Params& params);

/// d + 1 in the contracting regime, 2 in the covering regime.
double theoretical_attractor_dim(const Params& params);

/// Occupied cells of the 2^k grid (per axis) over [-1,1]^dim; 1 <= k <= 24.
std::uint64_t box_count(const PointSet& points, int k);

/// box_count for every k in [k_min, k_max] from a single sort of the points.
std::vector<std::uint64_t> box_counts(const PointSet& points, int k_min, int k_max);

struct DimensionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int k_min = 0;
  int k_max = 0;
  std::vector<double> log_scales;  // regressor values
  std::vector<double> log_counts;  // response values
  std::vector<double> raw;         // box counts or correlation sums

  /// Fits below this r^2 are reported as unreliable.
  static constexpr double kMinRSquared = 0.99;
  bool reliable() const noexcept { return r_squared > kMinRSquared; }
};

/// Ordinary least squares of y on x; needs at least two distinct x values.
DimensionFit fit_line(std::span<const double> x, std::span<const double> y);

/// Slope of ln N(k) against k ln 2 over the window.
DimensionFit fit_box_dimension(const PointSet& points, int k_min, int k_max);
/// Same regression on precomputed counts N(k_min), ..., N(k_max).
DimensionFit fit_box_counts(std::span<const std::uint64_t> counts, int k_min);

/// Upper bound on the number of point pairs used by correlation_dimension.
inline constexpr std::size_t kMaxCorrelationPairs = 10'000'000;

/// Grassberger-Procaccia estimate: slope of ln C(r) against ln r, where C(r)
/// is the fraction of pairs at Euclidean distance below r. If all pairs do not
/// fit in kMaxCorrelationPairs, pairs are drawn deterministically from `seed`.
DimensionFit correlation_dimension(const PointSet& points, std::span<const double> radii,
                                   std::uint64_t seed = 0);

/// radii[i] = r_max * ratio^i for i < count, ratio in (0, 1).
std::vector<double> geometric_radii(double r_max, double ratio, std::size_t count);

/// entropy / ln 2 + 1, bound from the vertical (dyadic) direction.
double bound_vertical(const BernoulliSpec& spec) noexcept;
/// entropy / xi + 1, bound from the horizontal (contracting) direction.
double bound_horizontal(const BernoulliSpec& spec, const Params& params) noexcept;
double bound_combined(const BernoulliSpec& spec, const Params& params) noexcept;

struct BoundProfile {
  std::vector<double> p;
  std::vector<double> entropy;
  std::vector<double> xi;
  std::vector<double> vertical;
  std::vector<double> horizontal;
  std::vector<double> combined;
  double sup_p = 0.0;
  double sup_value = 0.0;
};

/// Maximizes bound_combined over the Bernoulli family: uniform scan of `grid`
/// points on [0,1] (grid >= 101) followed by golden-section refinement around
/// the best grid point down to refine_tol in p.
BoundProfile sup_bernoulli_bound(const Params& params, std::size_t grid = 1001,
                                 double refine_tol = 1e-12);

}  // namespace baker
