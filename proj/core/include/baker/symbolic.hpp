#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "baker/params.hpp"

namespace baker {

/// Default number of symbols kept when truncating an infinite sequence.
inline constexpr std::size_t kDefaultTruncation = 64;

/// A finite word over {-1, +1}. Index 0 is the first symbol read.
class SymbolWord {
 public:
  SymbolWord() = default;
  SymbolWord(std::initializer_list<int> symbols);
  explicit SymbolWord(std::vector<std::int8_t> symbols);

  static SymbolWord constant(int symbol, std::size_t length);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  int operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const std::int8_t> symbols() const noexcept { return symbols_; }

  void push_back(int symbol);
  SymbolWord prefix(std::size_t length) const;
  /// Drops the first symbol (the one-sided forward shift).
  SymbolWord shifted() const;

  friend bool operator==(const SymbolWord&, const SymbolWord&) = default;

 private:
  std::vector<std::int8_t> symbols_;
};

/// A truncated point of the two-sided shift. past[0] is s_{-1}, past[1] is
/// s_{-2}, ...; future[0] is s_0, future[1] is s_1, ...
struct BiWord {
  SymbolWord past;
  SymbolWord future;

  /// Applies the forward shift: s_0 moves to the front of the past.
  BiWord shifted() const;
};

/// A truncated series value together with a bound on the omitted tail.
struct ValueWithTail {
  double value = 0.0;
  double tail_bound = 0.0;

  bool contains(double exact, double slack = 0.0) const noexcept;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct CodedPoint {
  Point2 point;
  double x_tail = 0.0;
  double y_tail = 0.0;
};

/// Number of -1 symbols among word[0..k]. Throws std::out_of_range.
std::size_t count_minus(const SymbolWord& word, std::size_t k);

/// Self-similar series sum_k s_k beta2^{#k} beta1^{k-#k+1}.
ValueWithTail pi_star(const SymbolWord& word, const Params& params);

/// Affine map sending -beta2/(1-beta2) to -1 and beta1/(1-beta1) to 1.
double scale_L(double x, const Params& params) noexcept;
double scale_L_slope(const Params& params) noexcept;

/// scale_L composed with pi_star; lands in [-1, 1].
ValueWithTail pi(const SymbolWord& word, const Params& params);

/// Signed dyadic expansion sum_{k>=1} s_{-k} 2^{-k} of a past word.
ValueWithTail varsigma(const SymbolWord& past) noexcept;

/// Two-sided coding map: (pi(future), varsigma(past)).
CodedPoint code_point(const BiWord& w, const Params& params);

/// Cylinder metric on one-sided words. Zero on the diagonal; 1 when the words
/// already differ at index 0.
double delta_metric(const SymbolWord& s, const SymbolWord& t, const Params& params);

/// Diameter beta1^{#(+1)} beta2^{#(-1)} of the cylinder spanned by word.
double cylinder_diameter(const SymbolWord& word, const Params& params);
/// Natural log of cylinder_diameter; stays finite for long words.
double log_cylinder_diameter(const SymbolWord& word, const Params& params);

/// Max-norm distance between f(code(shift w)) and code(w), both truncated to
/// `truncation` symbols on each side.
double conjugacy_defect(const BiWord& w, const Params& params, std::size_t truncation);

/// The analytic bound the conjugacy defect must respect at this truncation.
double conjugacy_tail_bound(const Params& params, std::size_t truncation) noexcept;

}  // namespace baker
