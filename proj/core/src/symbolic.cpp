#include "baker/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "baker/dynamics.hpp"
#include "baker/errors.hpp"

namespace baker {
namespace {

std::int8_t checked_symbol(int s) {
  if (s != 1 && s != -1) throw DomainError("symbols must be -1 or +1, got " + std::to_string(s));
  return static_cast<std::int8_t>(s);
}

inline double contraction(int symbol, const Params& params) noexcept {
  return symbol > 0 ? params.beta1() : params.beta2();
}

}  // namespace

SymbolWord::SymbolWord(std::initializer_list<int> symbols) {
  symbols_.reserve(symbols.size());
  for (int s : symbols) symbols_.push_back(checked_symbol(s));
}

SymbolWord::SymbolWord(std::vector<std::int8_t> symbols) : symbols_(std::move(symbols)) {
  for (auto s : symbols_) checked_symbol(s);
}

SymbolWord SymbolWord::constant(int symbol, std::size_t length) {
  return SymbolWord(std::vector<std::int8_t>(length, checked_symbol(symbol)));
}

void SymbolWord::push_back(int symbol) { symbols_.push_back(checked_symbol(symbol)); }

SymbolWord SymbolWord::prefix(std::size_t length) const {
  const auto n = std::min(length, symbols_.size());
  return SymbolWord(std::vector<std::int8_t>(symbols_.begin(), symbols_.begin() + n));
}

SymbolWord SymbolWord::shifted() const {
  if (symbols_.empty()) return {};
  return SymbolWord(std::vector<std::int8_t>(symbols_.begin() + 1, symbols_.end()));
}

BiWord BiWord::shifted() const {
  if (future.empty()) throw DomainError("cannot shift a biword with an empty future");
  std::vector<std::int8_t> new_past;
  new_past.reserve(past.size() + 1);
  new_past.push_back(static_cast<std::int8_t>(future[0]));
  new_past.insert(new_past.end(), past.symbols().begin(), past.symbols().end());
  return BiWord{SymbolWord(std::move(new_past)), future.shifted()};
}

bool ValueWithTail::contains(double exact, double slack) const noexcept {
  return std::abs(exact - value) <= tail_bound + slack;
}

std::size_t count_minus(const SymbolWord& word, std::size_t k) {
  if (k >= word.size()) {
    throw std::out_of_range("count_minus: index " + std::to_string(k) +
                            " out of range for word of length " + std::to_string(word.size()));
  }
  const auto symbols = word.symbols();
  return static_cast<std::size_t>(
      std::count(symbols.begin(), symbols.begin() + static_cast<std::ptrdiff_t>(k) + 1, -1));
}

ValueWithTail pi_star(const SymbolWord& word, const Params& params) {
  if (word.empty()) throw DomainError("pi_star: empty word");
  // The k-th coefficient is the product of the contraction rates of s_0..s_k.
  double weight = 1.0;
  double sum = 0.0;
  for (auto s : word.symbols()) {
    weight *= contraction(s, params);
    sum += s * weight;
  }
  const double m = params.max_beta();
  const double tail = 2.0 * std::pow(m, static_cast<double>(word.size())) / (1.0 - m);
  return {sum, tail};
}

double scale_L_slope(const Params& params) noexcept {
  const double a = -params.beta2() / (1.0 - params.beta2());
  const double b = params.beta1() / (1.0 - params.beta1());
  return 2.0 / (b - a);
}

double scale_L(double x, const Params& params) noexcept {
  const double a = -params.beta2() / (1.0 - params.beta2());
  return (x - a) * scale_L_slope(params) - 1.0;
}

ValueWithTail pi(const SymbolWord& word, const Params& params) {
  const ValueWithTail raw = pi_star(word, params);
  return {scale_L(raw.value, params), raw.tail_bound * scale_L_slope(params)};
}

ValueWithTail varsigma(const SymbolWord& past) noexcept {
  double scale = 0.5;
  double sum = 0.0;
  for (auto s : past.symbols()) {
    sum += s * scale;
    scale *= 0.5;
  }
  return {sum, 2.0 * scale};
}

CodedPoint code_point(const BiWord& w, const Params& params) {
  if (w.future.empty()) throw DomainError("code_point: empty future");
  const ValueWithTail x = pi(w.future, params);
  const ValueWithTail y = varsigma(w.past);
  return {{x.value, y.value}, x.tail_bound, y.tail_bound};
}

double delta_metric(const SymbolWord& s, const SymbolWord& t, const Params& params) {
  if (s.size() != t.size()) throw DomainError("delta_metric: length mismatch");
  if (s.empty()) throw DomainError("delta_metric: empty words");
  double diameter = 1.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != t[i]) return diameter;
    diameter *= contraction(s[i], params);
  }
  return 0.0;
}

double cylinder_diameter(const SymbolWord& word, const Params& params) {
  if (word.empty()) throw DomainError("cylinder_diameter: empty word");
  double diameter = 1.0;
  for (auto s : word.symbols()) diameter *= contraction(s, params);
  return diameter;
}

double log_cylinder_diameter(const SymbolWord& word, const Params& params) {
  if (word.empty()) throw DomainError("log_cylinder_diameter: empty word");
  const auto symbols = word.symbols();
  const auto minus = std::count(symbols.begin(), symbols.end(), -1);
  const auto plus = static_cast<std::ptrdiff_t>(symbols.size()) - minus;
  return static_cast<double>(plus) * std::log(params.beta1()) +
         static_cast<double>(minus) * std::log(params.beta2());
}

double conjugacy_tail_bound(const Params& params, std::size_t truncation) noexcept {
  const double m = params.max_beta();
  const double slope = scale_L_slope(params);
  const auto n = static_cast<double>(truncation);
  // f contracts x by at most m, so the shifted future's tail shrinks by m.
  const double x_tails = slope * 2.0 * (m * std::pow(m, n - 1.0) + std::pow(m, n)) / (1.0 - m);
  const double y_tails = 2.0 * std::exp2(-(n + 1.0)) + std::exp2(-n);
  const double rounding = 8.0 * n * std::numeric_limits<double>::epsilon();
  return std::max(x_tails, y_tails) + rounding;
}

double conjugacy_defect(const BiWord& w, const Params& params, std::size_t truncation) {
  if (truncation < 2) throw DomainError("conjugacy_defect: truncation must be >= 2");
  if (w.future.size() < truncation) {
    throw DomainError("conjugacy_defect: future shorter than truncation");
  }
  const BiWord truncated{w.past.prefix(truncation), w.future.prefix(truncation)};
  const Point2 pushed = apply_f(code_point(truncated.shifted(), params).point, params);
  const Point2 direct = code_point(truncated, params).point;
  return std::max(std::abs(pushed.x - direct.x), std::abs(pushed.y - direct.y));
}

}  // namespace baker
