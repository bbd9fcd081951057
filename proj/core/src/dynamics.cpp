#include "baker/dynamics.hpp"

#include <cmath>

#include "baker/dimension.hpp"
#include "baker/errors.hpp"
#include "baker/measures.hpp"
#include "baker/parallel.hpp"

namespace baker {

void SymbolWeights::validate() const {
  if (!(plus >= 0.0) || !(minus >= 0.0) || std::abs(plus + minus - 1.0) > 1e-12) {
    throw DomainError("symbol weights must be non-negative and sum to 1");
  }
}

Point2 apply_f(Point2 p, const Params& params) noexcept {
  if (p.y >= 0.0) {
    return {params.beta1() * p.x + (1.0 - params.beta1()), 2.0 * p.y - 1.0};
  }
  return {params.beta2() * p.x - (1.0 - params.beta2()), 2.0 * p.y + 1.0};
}

std::vector<Point2> iterate(Point2 p, std::size_t n, const Params& params) {
  std::vector<Point2> orbit;
  orbit.reserve(n + 1);
  orbit.push_back(p);
  for (std::size_t k = 0; k < n; ++k) orbit.push_back(apply_f(orbit.back(), params));
  return orbit;
}

Regime regime(const Params& params) noexcept {
  return params.contracting() ? Regime::Contracting : Regime::Covering;
}

SymbolWeights natural_weights(const Params& params) {
  if (params.covering()) return {0.5, 0.5};
  const double d = moran_exponent(params).d;
  const double plus = std::pow(params.beta1(), d);
  return {plus, 1.0 - plus};
}

bool in_square(Point2 p, double slack) noexcept {
  return std::abs(p.x) <= 1.0 + slack && std::abs(p.y) <= 1.0 + slack;
}

PointSet attractor_sample(const Params& params, std::size_t n, std::uint64_t seed,
                          SymbolWeights weights, std::size_t truncation) {
  weights.validate();
  if (truncation == 0) throw DomainError("attractor_sample: truncation must be positive");
  const BernoulliSpec future_law(weights.plus);
  const BernoulliSpec past_law(0.5);

  std::vector<double> coords(2 * n);
  parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const BiWord w{sample_word(past_law, truncation, seed, i, Stream::Past),
                     sample_word(future_law, truncation, seed, i, Stream::Future)};
      const Point2 p = code_point(w, params).point;
      coords[2 * i] = p.x;
      coords[2 * i + 1] = p.y;
    }
  });
  return PointSet(2, std::move(coords), SampleMeta{seed, truncation, params, weights.plus});
}

}  // namespace baker
