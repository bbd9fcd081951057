#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "baker/params.hpp"
#include "baker/point_set.hpp"
#include "baker/rng.hpp"
#include "baker/symbolic.hpp"

namespace baker {

/// Bernoulli measure on the shift; p is the probability of the symbol +1.
class BernoulliSpec {
 public:
  explicit BernoulliSpec(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return 1.0 - p_; }

 private:
  double p_;
};

/// Metric entropy in nats, with 0 ln 0 = 0.
double entropy(const BernoulliSpec& spec) noexcept;

/// Average horizontal contraction -(p ln beta1 + (1-p) ln beta2), in nats.
double xi(const BernoulliSpec& spec, const Params& params) noexcept;

/// ln of the Bernoulli mass of the cylinder spanned by word. -inf when the
/// word has a symbol of probability zero.
double log_cylinder_mass(const SymbolWord& word, const BernoulliSpec& spec) noexcept;

/// i.i.d. Bernoulli word; depends only on (seed, stream, index).
SymbolWord sample_word(const BernoulliSpec& spec, std::size_t length,
                       std::uint64_t seed, std::uint64_t index,
                       Stream stream = Stream::Future);

/// 1-D samples of the pushforward of the Bernoulli measure under pi.
PointSet pushforward_sample(const BernoulliSpec& spec, const Params& params,
                            std::size_t n, std::size_t word_length,
                            std::uint64_t seed);

/// 2-D samples of (pushforward) x (normalized Lebesgue), i.e. the coding of
/// biwords with Bernoulli(p) futures and fair pasts.
PointSet product_sample(const BernoulliSpec& spec, const Params& params,
                        std::size_t n, std::size_t word_length,
                        std::uint64_t seed);

/// Histogram diagnostics on the regular grid over [-1,1]^dim.
struct DensityReport {
  std::size_t dim = 1;
  std::size_t bins = 0;
  std::vector<std::uint64_t> counts;  // row-major, x fastest
  std::size_t total = 0;
  /// (cell volume)^{-1} * sum of squared cell masses; 2^{-dim} iff uniform.
  double l2_statistic = 0.0;
  double max_cell_mass = 0.0;

  double mass(std::size_t cell) const noexcept {
    return static_cast<double>(counts[cell]) / static_cast<double>(total);
  }
};

DensityReport density_report(const PointSet& points, std::size_t bins);

/// Index of the regular cell containing x, with [-1,1] split into `cells`
/// pieces. Values outside the interval are clamped to the edge cells.
std::size_t cell_index(double x, std::size_t cells) noexcept;

}  // namespace baker
