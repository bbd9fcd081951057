#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "baker/params.hpp"
#include "baker/point_set.hpp"
#include "baker/symbolic.hpp"

namespace baker {

/// Numerical slack allowed around the unit square.
inline constexpr double kSquareSlack = 1e-12;

/// Symbol distribution for the future half of sampled biwords.
struct SymbolWeights {
  double plus = 0.5;
  double minus = 0.5;

  /// Throws DomainError unless both are >= 0 and they sum to 1.
  void validate() const;
};

/// One step of the generalized Baker map. The line y = 0 belongs to the upper
/// branch.
Point2 apply_f(Point2 p, const Params& params) noexcept;

/// The orbit p, f(p), ..., f^n(p).
std::vector<Point2> iterate(Point2 p, std::size_t n, const Params& params);

Regime regime(const Params& params) noexcept;

/// (beta1^d, beta2^d) when contracting, fair weights when covering.
SymbolWeights natural_weights(const Params& params);

/// Points on the attractor obtained by coding random biwords: future symbols
/// are +1 with probability weights.plus, past symbols are fair. Point i depends
/// only on (seed, i).
PointSet attractor_sample(const Params& params, std::size_t n, std::uint64_t seed,
                          SymbolWeights weights,
                          std::size_t truncation = kDefaultTruncation);

bool in_square(Point2 p, double slack = kSquareSlack) noexcept;

}  // namespace baker
