#include "baker/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "baker/errors.hpp"
#include "baker/parallel.hpp"
#include "baker/rng.hpp"

namespace baker {
namespace {

constexpr int kMaxBoxExponent = 24;

/// Spreads the low 32 bits of v so bit i lands on bit 2i.
std::uint64_t spread_bits(std::uint64_t v) noexcept {
  v &= 0xFFFFFFFFull;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
  v = (v | (v << 2)) & 0x3333333333333333ull;
  v = (v | (v << 1)) & 0x5555555555555555ull;
  return v;
}

/// Cell keys at resolution 2^k, ordered so that dropping dim low bits gives
/// the key of the parent cell at resolution 2^(k-1).
std::vector<std::uint64_t> sorted_cell_keys(const PointSet& points, int k) {
  const std::size_t cells = std::size_t{1} << k;
  std::vector<std::uint64_t> keys(points.size());
  parallel_chunks(points.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto p = points.point(i);
      const std::uint64_t ix = cell_index(p[0], cells);
      keys[i] = points.dim() == 1 ? ix : (spread_bits(ix) << 1) | spread_bits(cell_index(p[1], cells));
    }
  });
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::uint64_t count_distinct_prefixes(const std::vector<std::uint64_t>& sorted, int shift) {
  std::uint64_t count = 0;
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::uint64_t key = sorted[i] >> shift;
    if (i == 0 || key != previous) ++count;
    previous = key;
  }
  return count;
}

void check_window(int k_min, int k_max) {
  if (k_min < 1 || k_max > kMaxBoxExponent || k_max <= k_min) {
    throw DomainError("box-counting window must satisfy 1 <= k_min < k_max <= 24");
  }
}

double golden_section_max(double lo, double hi, double tol, const auto& f) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

MoranResult moran_exponent(const Params& params) {
  if (!params.contracting()) {
    throw RegimeError("Moran equation needs beta1 + beta2 < 1");
  }
  auto g = [&](double t) { return std::pow(params.beta1(), t) + std::pow(params.beta2(), t) - 1.0; };
  // g is strictly decreasing with g(0+) = 1 and g(inf) = -1.
  double lo = 1e-9, hi = 64.0;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  const double d = std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
  return {d, g(d)};
}

double theoretical_attractor_dim(const Params& params) {
  return params.contracting() ? moran_exponent(params).d + 1.0 : 2.0;
}

std::vector<std::uint64_t> box_counts(const PointSet& points, int k_min, int k_max) {
  if (points.empty()) throw DomainError("box_count: empty point set");
  if (k_min < 1 || k_max > kMaxBoxExponent || k_max < k_min) {
    throw DomainError("box-counting exponents must satisfy 1 <= k <= 24");
  }
  const auto keys = sorted_cell_keys(points, k_max);
  std::vector<std::uint64_t> counts;
  counts.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (int k = k_min; k <= k_max; ++k) {
    const int shift = static_cast<int>(points.dim()) * (k_max - k);
    counts.push_back(count_distinct_prefixes(keys, shift));
  }
  return counts;
}

std::uint64_t box_count(const PointSet& points, int k) { return box_counts(points, k, k).front(); }

DimensionFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_line: need >= 2 paired values");
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_line: regressor values are all equal");

  DimensionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  fit.log_scales.assign(x.begin(), x.end());
  fit.log_counts.assign(y.begin(), y.end());
  return fit;
}

DimensionFit fit_box_counts(std::span<const std::uint64_t> counts, int k_min) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) throw DomainError("fit_box_counts: zero count");
    x.push_back(static_cast<double>(k_min + static_cast<int>(i)) * std::log(2.0));
    y.push_back(std::log(static_cast<double>(counts[i])));
  }
  DimensionFit fit = fit_line(x, y);
  fit.k_min = k_min;
  fit.k_max = k_min + static_cast<int>(counts.size()) - 1;
  fit.raw.assign(counts.begin(), counts.end());
  return fit;
}

DimensionFit fit_box_dimension(const PointSet& points, int k_min, int k_max) {
  check_window(k_min, k_max);
  const auto counts = box_counts(points, k_min, k_max);
  return fit_box_counts(counts, k_min);
}

std::vector<double> geometric_radii(double r_max, double ratio, std::size_t count) {
  if (!(r_max > 0.0) || !(ratio > 0.0 && ratio < 1.0)) {
    throw DomainError("geometric_radii: need r_max > 0 and ratio in (0, 1)");
  }
  std::vector<double> radii(count);
  for (std::size_t i = 0; i < count; ++i) radii[i] = r_max * std::pow(ratio, static_cast<double>(i));
  return radii;
}

DimensionFit correlation_dimension(const PointSet& points, std::span<const double> radii,
                                   std::uint64_t seed) {
  if (points.size() < 1000) throw DomainError("correlation_dimension: need >= 1000 points");
  if (radii.size() < 4) throw DomainError("correlation_dimension: need >= 4 radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] < radii[i - 1]))) {
      throw DomainError("correlation_dimension: radii must be positive and strictly decreasing");
    }
  }

  // Ascending copy; a pair at distance d counts toward every radius > d.
  std::vector<double> ascending(radii.rbegin(), radii.rend());
  const std::size_t r_count = ascending.size();
  const std::size_t n = points.size();
  const std::size_t all_pairs = n * (n - 1) / 2;
  const bool exhaustive = all_pairs <= kMaxCorrelationPairs;
  const std::size_t pair_count = exhaustive ? all_pairs : kMaxCorrelationPairs;

  auto distance = [&](std::size_t i, std::size_t j) {
    const auto a = points.point(i);
    const auto b = points.point(j);
    double sq = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) sq += (a[c] - b[c]) * (a[c] - b[c]);
    return std::sqrt(sq);
  };

  std::vector<std::uint64_t> hits(r_count + 1, 0);
  std::mutex merge_mutex;
  auto tally = [&](std::vector<std::uint64_t>& local, double d) {
    const auto slot = std::upper_bound(ascending.begin(), ascending.end(), d) - ascending.begin();
    ++local[static_cast<std::size_t>(slot)];
  };
  auto merge = [&](const std::vector<std::uint64_t>& local) {
    std::lock_guard lock(merge_mutex);
    for (std::size_t r = 0; r <= r_count; ++r) hits[r] += local[r];
  };

  if (exhaustive) {
    parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
      std::vector<std::uint64_t> local(r_count + 1, 0);
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) tally(local, distance(i, j));
      }
      merge(local);
    }, 64);
  } else {
    parallel_chunks(pair_count, [&](std::size_t begin, std::size_t end) {
      std::vector<std::uint64_t> local(r_count + 1, 0);
      for (std::size_t k = begin; k < end; ++k) {
        KeyedUniform rng(seed, Stream::Pairs, k);
        const auto i = static_cast<std::size_t>(rng.uniform() * static_cast<double>(n));
        auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(n - 1));
        if (j >= i) ++j;
        tally(local, distance(i, j));
      }
      merge(local);
    });
  }

  // hits[s] = pairs whose distance lies in [ascending[s-1], ascending[s]).
  std::vector<double> x, y, raw;
  std::uint64_t below = 0;
  std::vector<double> fraction(r_count);
  for (std::size_t s = 0; s < r_count; ++s) {
    below += hits[s];
    fraction[s] = static_cast<double>(below) / static_cast<double>(pair_count);
  }
  for (std::size_t i = 0; i < r_count; ++i) {
    const std::size_t s = r_count - 1 - i;  // back to the caller's order
    if (fraction[s] == 0.0) {
      throw DomainError("correlation_dimension: no pairs below the smallest radius");
    }
    x.push_back(std::log(radii[i]));
    y.push_back(std::log(fraction[s]));
    raw.push_back(fraction[s]);
  }
  DimensionFit fit = fit_line(x, y);
  fit.k_min = 0;
  fit.k_max = static_cast<int>(r_count) - 1;
  fit.raw = std::move(raw);
  return fit;
}

double bound_vertical(const BernoulliSpec& spec) noexcept {
  return entropy(spec) / std::log(2.0) + 1.0;
}

double bound_horizontal(const BernoulliSpec& spec, const Params& params) noexcept {
  return entropy(spec) / xi(spec, params) + 1.0;
}

double bound_combined(const BernoulliSpec& spec, const Params& params) noexcept {
  return std::min(bound_vertical(spec), bound_horizontal(spec, params));
}

BoundProfile sup_bernoulli_bound(const Params& params, std::size_t grid, double refine_tol) {
  if (grid < 101) throw DomainError("sup_bernoulli_bound: grid must have >= 101 points");
  if (!(refine_tol > 0.0)) throw DomainError("sup_bernoulli_bound: refine_tol must be positive");

  BoundProfile profile;
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(grid - 1);
    const BernoulliSpec spec(p);
    profile.p.push_back(p);
    profile.entropy.push_back(entropy(spec));
    profile.xi.push_back(xi(spec, params));
    profile.vertical.push_back(bound_vertical(spec));
    profile.horizontal.push_back(bound_horizontal(spec, params));
    profile.combined.push_back(std::min(profile.vertical.back(), profile.horizontal.back()));
    if (profile.combined.back() > profile.combined[best]) best = i;
  }
  profile.sup_p = profile.p[best];
  profile.sup_value = profile.combined[best];

  const double lo = profile.p[best == 0 ? 0 : best - 1];
  const double hi = profile.p[std::min(best + 1, grid - 1)];
  auto objective = [&](double p) { return bound_combined(BernoulliSpec(std::clamp(p, 0.0, 1.0)), params); };
  const double refined_p = std::clamp(golden_section_max(lo, hi, refine_tol, objective), 0.0, 1.0);
  const double refined_value = objective(refined_p);
  if (refined_value > profile.sup_value) {
    profile.sup_p = refined_p;
    profile.sup_value = refined_value;
  }
  return profile;
}

}  // namespace baker
