#include "baker/measures.hpp"

#include <algorithm>
#include <cmath>

#include "baker/errors.hpp"
#include "baker/parallel.hpp"

namespace baker {
namespace {

double xlogx(double x) noexcept { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

BernoulliSpec::BernoulliSpec(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Bernoulli probability must lie in [0, 1]");
}

double entropy(const BernoulliSpec& spec) noexcept {
  return -(xlogx(spec.p()) + xlogx(spec.q()));
}

double xi(const BernoulliSpec& spec, const Params& params) noexcept {
  return -(spec.p() * std::log(params.beta1()) + spec.q() * std::log(params.beta2()));
}

double log_cylinder_mass(const SymbolWord& word, const BernoulliSpec& spec) noexcept {
  const auto symbols = word.symbols();
  const auto minus = std::count(symbols.begin(), symbols.end(), -1);
  const auto plus = static_cast<std::ptrdiff_t>(symbols.size()) - minus;
  auto term = [](std::ptrdiff_t count, double prob) {
    return count == 0 ? 0.0 : static_cast<double>(count) * std::log(prob);
  };
  return term(plus, spec.p()) + term(minus, spec.q());
}

SymbolWord sample_word(const BernoulliSpec& spec, std::size_t length, std::uint64_t seed,
                       std::uint64_t index, Stream stream) {
  if (length == 0) throw DomainError("sample_word: length must be positive");
  KeyedUniform rng(seed, stream, index);
  std::vector<std::int8_t> symbols(length);
  for (auto& s : symbols) s = rng.uniform() < spec.p() ? 1 : -1;
  return SymbolWord(std::move(symbols));
}

PointSet pushforward_sample(const BernoulliSpec& spec, const Params& params, std::size_t n,
                            std::size_t word_length, std::uint64_t seed) {
  std::vector<double> xs(n);
  parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      xs[i] = pi(sample_word(spec, word_length, seed, i), params).value;
    }
  });
  return PointSet::line(std::move(xs), SampleMeta{seed, word_length, params, spec.p()});
}

PointSet product_sample(const BernoulliSpec& spec, const Params& params, std::size_t n,
                        std::size_t word_length, std::uint64_t seed) {
  const BernoulliSpec fair(0.5);
  std::vector<double> coords(2 * n);
  parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const BiWord w{sample_word(fair, word_length, seed, i, Stream::Past),
                     sample_word(spec, word_length, seed, i, Stream::Future)};
      const Point2 p = code_point(w, params).point;
      coords[2 * i] = p.x;
      coords[2 * i + 1] = p.y;
    }
  });
  return PointSet(2, std::move(coords), SampleMeta{seed, word_length, params, spec.p()});
}

std::size_t cell_index(double x, std::size_t cells) noexcept {
  const double scaled = std::floor((x + 1.0) * 0.5 * static_cast<double>(cells));
  if (!(scaled > 0.0)) return 0;
  const auto idx = static_cast<std::size_t>(scaled);
  return std::min(idx, cells - 1);
}

DensityReport density_report(const PointSet& points, std::size_t bins) {
  if (points.empty()) throw DomainError("density_report: empty point set");
  if (bins < 2) throw DomainError("density_report: need at least 2 bins per axis");

  DensityReport report;
  report.dim = points.dim();
  report.bins = bins;
  report.total = points.size();
  const std::size_t cells = points.dim() == 1 ? bins : bins * bins;
  report.counts.assign(cells, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    std::size_t cell = cell_index(p[0], bins);
    if (points.dim() == 2) cell += bins * cell_index(p[1], bins);
    ++report.counts[cell];
  }

  double sum_sq = 0.0;
  std::uint64_t max_count = 0;
  for (auto c : report.counts) {
    const double m = static_cast<double>(c) / static_cast<double>(report.total);
    sum_sq += m * m;
    max_count = std::max(max_count, c);
  }
  const double cell_volume = std::pow(2.0 / static_cast<double>(bins), static_cast<double>(report.dim));
  report.l2_statistic = sum_sq / cell_volume;
  report.max_cell_mass = static_cast<double>(max_count) / static_cast<double>(report.total);
  return report;
}

}  // namespace baker
