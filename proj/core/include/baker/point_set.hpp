#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "baker/params.hpp"
#include "baker/symbolic.hpp"

namespace baker {

/// How a PointSet was produced; rerunning with the same metadata reproduces
/// the set exactly.
struct SampleMeta {
  std::uint64_t seed = 0;
  std::size_t truncation = 0;
  std::optional<Params> params;
  double weight_plus = 0.5;
};

/// Points in [-1,1]^dim, dim in {1, 2}, stored row-major.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<double> coords, SampleMeta meta = {});

  static PointSet line(std::vector<double> xs, SampleMeta meta = {});
  static PointSet plane(std::span<const Point2> points, SampleMeta meta = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  Point2 point2(std::size_t i) const noexcept {
    return {coords_[2 * i], coords_[2 * i + 1]};
  }
  std::span<const double> coords() const noexcept { return coords_; }
  const SampleMeta& meta() const noexcept { return meta_; }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  SampleMeta meta_;
};

}  // namespace baker
