#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace efa {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Pixel {
  int x = 0;
  int y = 0;
  friend bool operator==(const Pixel&, const Pixel&) = default;
};

/// Freeman direction displacement, y-up: 0 is +x, 2 is +y, odd links diagonal.
inline constexpr Pixel kDirections[8] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                         {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

/// Traversal time of one link: 1 for axis-aligned links, sqrt(2) for diagonals.
double link_time(std::uint8_t link);

/// Freeman 8-direction chain code with an explicit integer start pixel.
/// Construction validates the link alphabet only; closure is checked where
/// an operation needs a closed curve.
class ChainCode {
 public:
  ChainCode() = default;
  ChainCode(std::vector<std::uint8_t> links, Pixel start = {});

  /// Parses a string of digits '0'..'7'.
  static ChainCode parse(std::string_view digits, Pixel start = {});

  const std::vector<std::uint8_t>& links() const { return links_; }
  Pixel start() const { return start_; }
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }

  bool is_closed() const;
  /// Total period T = #even + sqrt(2) * #odd.
  double period() const;
  std::string to_string() const;

 private:
  std::vector<std::uint8_t> links_;
  Pixel start_;
};

/// Closed piecewise-linear contour; the last vertex connects back to the first.
/// At least three vertices, no two cyclically consecutive vertices equal.
class PolyContour {
 public:
  explicit PolyContour(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  /// Sum of segment lengths, the period T of the arc-length parametrization.
  double period() const;

 private:
  std::vector<Point> vertices_;
};

struct Calibration {
  double scale = 1.0;  // millimeters per pixel
};

PolyContour chain_to_contour(const ChainCode& code);
ChainCode contour_to_chain(std::span<const Pixel> points);

double perimeter(const ChainCode& code, Calibration cal = {});
double perimeter(const PolyContour& contour, Calibration cal = {});

double signed_area(const PolyContour& contour);
double area(const PolyContour& contour, Calibration cal = {});

Calibration calibrate(Pixel p1, Pixel p2, double distance_mm);

// Boundary (`*_b.txt`) and chain-code (`*_c.txt`) text formats.
std::string format_boundary(const PolyContour& contour);
PolyContour parse_boundary(std::string_view text);
std::string format_chain(const ChainCode& code);
ChainCode parse_chain(std::string_view text);

}  // namespace efa
