#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "baker/baker.hpp"

namespace baker::cli {
namespace {

std::string label(const Params& params) {
  std::ostringstream out;
  out << "(" << params.beta1() << "," << params.beta2() << ")";
  return out.str();
}

Check at_most(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, "<=", measured <= tolerance};
}

Check at_least(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, ">=", measured >= tolerance};
}

/// Random biword with fair symbols on both sides.
BiWord fair_biword(std::size_t length, std::uint64_t seed, std::uint64_t index) {
  const BernoulliSpec fair(0.5);
  return {sample_word(fair, length, seed, index, Stream::Past),
          sample_word(fair, length, seed, index, Stream::Future)};
}

/// A word pair that agrees on a random prefix and then differs, so that every
/// agreement length is exercised.
std::pair<SymbolWord, SymbolWord> agreeing_pair(std::uint64_t seed, std::uint64_t index) {
  KeyedUniform rng(seed, Stream::Pairs, index);
  const std::size_t length = 16 + static_cast<std::size_t>(rng.uniform() * 49.0);
  const std::size_t agree = static_cast<std::size_t>(rng.uniform() * static_cast<double>(length));
  const BernoulliSpec fair(0.5);
  const SymbolWord s = sample_word(fair, length, seed, index, Stream::Future);
  const SymbolWord rest = sample_word(fair, length, seed, index, Stream::Past);
  std::vector<std::int8_t> t(s.symbols().begin(), s.symbols().end());
  t[agree] = static_cast<std::int8_t>(-s[agree]);
  for (std::size_t i = agree + 1; i < length; ++i) t[i] = static_cast<std::int8_t>(rest[i]);
  return {s, SymbolWord(std::move(t))};
}

std::vector<Check> conjugacy_suite(std::uint64_t seed) {
  std::vector<Check> checks;
  constexpr std::size_t kWords = 10'000;
  constexpr std::size_t kTruncation = 64;
  for (const Params params : {Params(0.6, 0.55), Params(0.2, 0.3)}) {
    double worst = 0.0;
    double worst_excess = -1.0;
    const double bound = conjugacy_tail_bound(params, kTruncation);
    for (std::size_t i = 0; i < kWords; ++i) {
      const double defect = conjugacy_defect(fair_biword(kTruncation, seed, i), params, kTruncation);
      worst = std::max(worst, defect);
      worst_excess = std::max(worst_excess, defect - bound);
    }
    checks.push_back(at_most("max_defect " + label(params), worst, 1e-9));
    checks.push_back(at_most("defect_minus_tail_bound " + label(params), worst_excess, 0.0));
  }
  return checks;
}

std::vector<Check> lipschitz_suite(std::uint64_t seed) {
  std::vector<Check> checks;
  constexpr std::size_t kPairs = 100'000;
  for (const Params params : {Params(0.6, 0.4), Params(0.7, 0.65), Params(0.2, 0.3)}) {
    const double constant = 2.0 / (1.0 - params.max_beta());
    double worst = 0.0;
    for (std::size_t i = 0; i < kPairs; ++i) {
      const auto [s, t] = agreeing_pair(seed, i);
      const double gap = std::abs(pi_star(s, params).value - pi_star(t, params).value);
      worst = std::max(worst, gap / delta_metric(s, t, params));
    }
    checks.push_back(at_most("max_ratio " + label(params), worst, constant + 1e-9));
  }
  return checks;
}

/// Fraction of `trials` random words of length `length` whose per-symbol
/// statistic lands within 1% of its limit.
double limit_hit_rate(double p, std::uint64_t seed, bool birkhoff) {
  constexpr std::size_t kTrials = 1000;
  constexpr std::size_t kLength = 10'000;
  const Params params(0.6, 0.4);
  const BernoulliSpec spec(p);
  const double limit = birkhoff ? xi(spec, params) : entropy(spec);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const SymbolWord w = sample_word(spec, kLength, seed, i);
    const double log_value = birkhoff ? log_cylinder_diameter(w, params) : log_cylinder_mass(w, spec);
    const double rate = -log_value / static_cast<double>(kLength);
    if (std::abs(rate - limit) <= 0.01 * limit) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(kTrials);
}

std::vector<Check> limit_suite(std::uint64_t seed, bool birkhoff) {
  std::vector<Check> checks;
  for (double p : {0.3, 0.5, 0.7}) {
    std::ostringstream name;
    name << (birkhoff ? "diameter_rate_within_1pct p=" : "mass_rate_within_1pct p=") << p;
    checks.push_back(at_least(name.str(), limit_hit_rate(p, seed, birkhoff), 0.95));
  }
  return checks;
}

std::vector<Check> moran_suite(std::uint64_t) {
  std::vector<Check> checks;
  const MoranResult quarter = moran_exponent(Params(0.25, 0.25));
  checks.push_back(at_most("|d-0.5| (0.25,0.25)", std::abs(quarter.d - 0.5), 1e-12));
  const double closed = std::log(2.0) / std::log(1.0 / 0.3);
  checks.push_back(at_most("|d-ln2/ln(1/0.3)| (0.3,0.3)",
                           std::abs(moran_exponent(Params(0.3, 0.3)).d - closed), 1e-12));
  for (const Params params : {Params(0.2, 0.3), Params(0.1, 0.7), Params(0.45, 0.5)}) {
    checks.push_back(at_most("|residual| " + label(params),
                             std::abs(moran_exponent(params).residual), 1e-12));
  }
  const double d1 = moran_exponent(Params(0.2, 0.3)).d;
  const double d2 = moran_exponent(Params(0.25, 0.3)).d;
  const double d3 = moran_exponent(Params(0.25, 0.35)).d;
  checks.push_back(at_least("monotone increments min(d2-d1, d3-d2)", std::min(d2 - d1, d3 - d2),
                            std::numeric_limits<double>::min()));
  return checks;
}

std::vector<Check> bifurcation_suite(std::uint64_t) {
  std::vector<Check> checks;
  constexpr int kGrid = 50;
  std::size_t mismatches = 0;
  double worst_at_sup = 0.0;     // max |sup - 2| where beta1*beta2 >= 1/4
  double closest_below = 0.0;    // max sup where beta1*beta2 < 1/4
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const Params params((i + 0.5) / kGrid, (j + 0.5) / kGrid);
      if (!params.covering()) continue;
      const double sup = sup_bernoulli_bound(params, 1001, 1e-12).sup_value;
      if (params.product() >= 0.25) {
        worst_at_sup = std::max(worst_at_sup, std::abs(sup - 2.0));
        if (std::abs(sup - 2.0) > 1e-9) ++mismatches;
      } else {
        closest_below = std::max(closest_below, sup);
        if (sup >= 2.0 - 1e-6) ++mismatches;
      }
    }
  }
  checks.push_back(at_most("grid mismatches", static_cast<double>(mismatches), 0.0));
  checks.push_back(at_most("max |sup-2| on product>=1/4", worst_at_sup, 1e-9));
  checks.push_back(at_most("max sup on product<1/4", closest_below, 2.0 - 1e-6));

  const BoundProfile spot = sup_bernoulli_bound(Params(0.6, 0.4), 1001, 1e-12);
  checks.push_back(at_most("|sup-1.9927| (0.6,0.4)", std::abs(spot.sup_value - 1.9927), 1e-3));
  checks.push_back(at_most("|sup_p-0.5503| (0.6,0.4)", std::abs(spot.sup_p - 0.5503), 1e-3));

  std::size_t premise_mismatches = 0;
  const BernoulliSpec fair(0.5);
  for (int i = 1; i <= 100; ++i) {
    for (int j = 1; j <= 100; ++j) {
      const Params params(i / 101.0, j / 101.0);
      const bool premise = entropy(fair) < xi(fair, params);
      if (premise != (params.product() < 0.25)) ++premise_mismatches;
    }
  }
  checks.push_back(at_most("entropy premise mismatches", static_cast<double>(premise_mismatches), 0.0));
  return checks;
}

std::vector<Check> boxdim_suite(std::uint64_t seed) {
  std::vector<Check> checks;
  for (const Params params : {Params(0.2, 0.3), Params(0.6, 0.55)}) {
    const PointSet points = attractor_sample(params, std::size_t{1} << 20, seed, natural_weights(params));
    const DimensionFit fit = fit_box_dimension(points, 4, 10);
    const double expected = theoretical_attractor_dim(params);
    checks.push_back(at_most("|slope-dim| " + label(params), std::abs(fit.slope - expected), 0.10));
    checks.push_back(at_least("r2 " + label(params), fit.r_squared, DimensionFit::kMinRSquared));
  }
  return checks;
}

using SuiteFn = std::function<std::vector<Check>(std::uint64_t)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"conjugacy", conjugacy_suite},
      {"lipschitz", lipschitz_suite},
      {"birkhoff", [](std::uint64_t s) { return limit_suite(s, true); }},
      {"smb", [](std::uint64_t s) { return limit_suite(s, false); }},
      {"moran", moran_suite},
      {"bifurcation", bifurcation_suite},
      {"boxdim", boxdim_suite},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    out["checks"].push_back({{"name", c.name},
                             {"measured", c.measured},
                             {"relation", c.relation},
                             {"tolerance", c.tolerance},
                             {"passed", c.passed}});
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"conjugacy", "lipschitz", "birkhoff", "smb",
                                              "moran",     "bifurcation", "boxdim"};
  return names;
}

std::optional<SuiteReport> run_suite(const std::string& name, std::uint64_t seed) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) return std::nullopt;
  return SuiteReport{name, it->second(seed)};
}

}  // namespace baker::cli
