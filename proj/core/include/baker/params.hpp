#pragma once

#include <string>

namespace baker {

enum class Regime { Contracting, Covering };

std::string to_string(Regime regime);

/// Contraction rates (beta1, beta2) of the generalized Baker map, both in the
/// open interval (0, 1). beta1 acts on the upper half (y >= 0), beta2 on the
/// lower half.
class Params {
 public:
  Params(double beta1, double beta2);

  double beta1() const noexcept { return beta1_; }
  double beta2() const noexcept { return beta2_; }

  double sum() const noexcept { return beta1_ + beta2_; }
  double product() const noexcept { return beta1_ * beta2_; }
  double max_beta() const noexcept { return beta1_ > beta2_ ? beta1_ : beta2_; }

  bool contracting() const noexcept { return sum() < 1.0; }
  bool covering() const noexcept { return !contracting(); }
  bool subcritical_product() const noexcept { return product() < 0.25; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  double beta1_;
  double beta2_;
};

}  // namespace baker
