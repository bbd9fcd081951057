#include "cli/io.hpp"

#include <png.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "baker/errors.hpp"
#include "baker/measures.hpp"

namespace baker::cli {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const noexcept {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) fields.push_back(field);
  return fields;
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw DomainError("malformed number in CSV: '" + text + "'");
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void write_points_csv(std::ostream& out, const PointSet& points) {
  out << (points.dim() == 1 ? "x\n" : "x,y\n");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    out << format_double(p[0]);
    if (points.dim() == 2) out << ',' << format_double(p[1]);
    out << '\n';
  }
}

PointSet read_points_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("CSV input is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line, ',');
  if (header.empty() || header.size() > 2) throw DomainError("CSV header must be 'x' or 'x,y'");
  const std::size_t dim = header.size();

  std::vector<double> coords;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != dim) throw DomainError("CSV row has wrong number of columns: '" + line + "'");
    for (const auto& f : fields) coords.push_back(parse_double(f));
  }
  return PointSet(dim, std::move(coords));
}

Gray8 render_occupancy(const PointSet& points, std::size_t resolution) {
  if (points.dim() != 2) throw DomainError("render needs a 2-D point set");
  if (resolution == 0) throw DomainError("render resolution must be positive");
  std::vector<std::uint64_t> counts(resolution * resolution, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point2 p = points.point2(i);
    const std::size_t col = cell_index(p.x, resolution);
    const std::size_t row = resolution - 1 - cell_index(p.y, resolution);
    ++counts[row * resolution + col];
  }
  const std::uint64_t c_max = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  Gray8 image{resolution, resolution, std::vector<std::uint8_t>(counts.size(), 0)};
  if (c_max == 0) return image;
  const double denom = std::log1p(static_cast<double>(c_max));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double level = 255.0 * std::log1p(static_cast<double>(counts[i])) / denom;
    image.pixels[i] = static_cast<std::uint8_t>(std::lround(level));
  }
  return image;
}

void write_png(const std::filesystem::path& path, const Gray8& image) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed writing PNG '" + path.string() + "'");
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t row = 0; row < image.height; ++row) {
    png_write_row(png, image.pixels.data() + row * image.width);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fflush(file.get()) != 0) throw IoError("failed flushing '" + path.string() + "'");
}

Gray8 read_png(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw IoError("cannot open '" + path.string() + "' for reading");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("failed reading PNG '" + path.string() + "'");
  }
  png_init_io(png, file.get());
  png_read_info(png, info);
  if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY || png_get_bit_depth(png, info) != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("'" + path.string() + "' is not an 8-bit grayscale PNG");
  }
  Gray8 image;
  image.width = png_get_image_width(png, info);
  image.height = png_get_image_height(png, info);
  image.pixels.resize(image.width * image.height);
  for (std::size_t row = 0; row < image.height; ++row) {
    png_read_row(png, image.pixels.data() + row * image.width, nullptr);
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

}  // namespace baker::cli
