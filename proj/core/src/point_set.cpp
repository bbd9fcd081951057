#include "baker/point_set.hpp"

#include "baker/errors.hpp"

namespace baker {

PointSet::PointSet(std::size_t dim, std::vector<double> coords, SampleMeta meta)
    : dim_(dim), coords_(std::move(coords)), meta_(std::move(meta)) {
  if (dim_ != 1 && dim_ != 2) throw DomainError("PointSet dimension must be 1 or 2");
  if (coords_.size() % dim_ != 0) throw DomainError("coordinate count not a multiple of dim");
}

PointSet PointSet::line(std::vector<double> xs, SampleMeta meta) {
  return PointSet(1, std::move(xs), std::move(meta));
}

PointSet PointSet::plane(std::span<const Point2> points, SampleMeta meta) {
  std::vector<double> coords;
  coords.reserve(points.size() * 2);
  for (const Point2& p : points) {
    coords.push_back(p.x);
    coords.push_back(p.y);
  }
  return PointSet(2, std::move(coords), std::move(meta));
}

}  // namespace baker
