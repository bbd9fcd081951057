#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "baker/point_set.hpp"

namespace baker::cli {

/// Raised for unreadable/unwritable files; mapped to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// CSV with header `x` or `x,y`, LF line endings.
void write_points_csv(std::ostream& out, const PointSet& points);
PointSet read_points_csv(std::istream& in);

/// 8-bit grayscale image, row 0 at the top.
struct Gray8 {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

/// Bins a 2-D point set on a resolution x resolution grid over the square and
/// maps occupancy c to 255 * ln(1 + c) / ln(1 + c_max). y = 1 is the top row.
Gray8 render_occupancy(const PointSet& points, std::size_t resolution);

void write_png(const std::filesystem::path& path, const Gray8& image);
Gray8 read_png(const std::filesystem::path& path);

}  // namespace baker::cli
