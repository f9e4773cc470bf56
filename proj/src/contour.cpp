#include "efa/contour.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "efa/error.hpp"
#include "efa/text_io.hpp"

namespace efa {

double link_time(std::uint8_t link) {
  return (link & 1u) ? std::numbers::sqrt2 : 1.0;
}

ChainCode::ChainCode(std::vector<std::uint8_t> links, Pixel start)
    : links_(std::move(links)), start_(start) {
  for (std::size_t i = 0; i < links_.size(); ++i)
    if (links_[i] > 7)
      throw Error(ErrorCode::BadParameter,
                  "chain link " + std::to_string(i) + " is not in 0..7",
                  static_cast<std::ptrdiff_t>(i));
}

ChainCode ChainCode::parse(std::string_view digits, Pixel start) {
  std::vector<std::uint8_t> links;
  links.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '7')
      throw Error(ErrorCode::ParseError,
                  "invalid chain code character at offset " + std::to_string(i),
                  static_cast<std::ptrdiff_t>(i));
    links.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return ChainCode(std::move(links), start);
}

bool ChainCode::is_closed() const {
  long sx = 0;
  long sy = 0;
  for (auto k : links_) {
    sx += kDirections[k].x;
    sy += kDirections[k].y;
  }
  return sx == 0 && sy == 0;
}

double ChainCode::period() const {
  std::size_t odd = 0;
  for (auto k : links_) odd += k & 1u;
  return static_cast<double>(links_.size() - odd) +
         std::numbers::sqrt2 * static_cast<double>(odd);
}

std::string ChainCode::to_string() const {
  std::string s;
  s.reserve(links_.size());
  for (auto k : links_) s.push_back(static_cast<char>('0' + k));
  return s;
}

PolyContour::PolyContour(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3)
    throw Error(ErrorCode::InvalidContour,
                "a closed contour needs at least 3 vertices, got " +
                    std::to_string(vertices_.size()));
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % vertices_.size()];
    if (!std::isfinite(a.x) || !std::isfinite(a.y))
      throw Error(ErrorCode::InvalidContour,
                  "vertex " + std::to_string(i) + " is not finite",
                  static_cast<std::ptrdiff_t>(i));
    if (a == b)
      throw Error(ErrorCode::InvalidContour,
                  "zero-length segment after vertex " + std::to_string(i),
                  static_cast<std::ptrdiff_t>(i));
  }
}

double PolyContour::period() const {
  double t = 0.0;
  const std::size_t k = vertices_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % k];
    t += std::hypot(b.x - a.x, b.y - a.y);
  }
  return t;
}

PolyContour chain_to_contour(const ChainCode& code) {
  if (!code.is_closed())
    throw Error(ErrorCode::NotClosed, "chain code does not return to its start");
  std::vector<Point> v;
  v.reserve(code.size());
  Pixel p = code.start();
  for (std::size_t i = 0; i < code.size(); ++i) {
    v.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
    p.x += kDirections[code.links()[i]].x;
    p.y += kDirections[code.links()[i]].y;
  }
  return PolyContour(std::move(v));
}

namespace {

int direction_of(int dx, int dy) {
  for (int k = 0; k < 8; ++k)
    if (kDirections[k].x == dx && kDirections[k].y == dy) return k;
  return -1;
}

}  // namespace

ChainCode contour_to_chain(std::span<const Pixel> points) {
  const std::size_t n = points.size();
  if (n < 2)
    throw Error(ErrorCode::DegenerateBoundary,
                "a closed chain needs at least 2 boundary pixels");
  std::vector<std::uint8_t> links(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Pixel& a = points[i];
    const Pixel& b = points[(i + 1) % n];
    const int k = direction_of(b.x - a.x, b.y - a.y);
    if (k < 0) {
      const std::size_t where = (i + 1) % n;
      throw Error(ErrorCode::NotAdjacent,
                  "pixel " + std::to_string(where) + " at (" +
                      std::to_string(b.x) + "," + std::to_string(b.y) +
                      ") is not an 8-neighbour of its predecessor",
                  static_cast<std::ptrdiff_t>(where));
    }
    links[i] = static_cast<std::uint8_t>(k);
  }
  return ChainCode(std::move(links), points[0]);
}

double perimeter(const ChainCode& code, Calibration cal) {
  return code.period() * cal.scale;
}

double perimeter(const PolyContour& contour, Calibration cal) {
  return contour.period() * cal.scale;
}

double signed_area(const PolyContour& contour) {
  const auto& v = contour.vertices();
  const std::size_t k = v.size();
  // Shoelace relative to the first vertex keeps the sum well conditioned
  // for contours far from the origin.
  const Point o = v[0];
  double twice = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Point a{v[i].x - o.x, v[i].y - o.y};
    const Point b{v[(i + 1) % k].x - o.x, v[(i + 1) % k].y - o.y};
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

double area(const PolyContour& contour, Calibration cal) {
  return std::abs(signed_area(contour)) * cal.scale * cal.scale;
}

Calibration calibrate(Pixel p1, Pixel p2, double distance_mm) {
  if (p1 == p2)
    throw Error(ErrorCode::DegenerateRuler, "ruler end points coincide");
  if (!(distance_mm > 0.0))
    throw Error(ErrorCode::DegenerateRuler, "ruler distance must be positive");
  const double px = std::hypot(static_cast<double>(p2.x - p1.x),
                               static_cast<double>(p2.y - p1.y));
  return Calibration{distance_mm / px};
}

std::string format_boundary(const PolyContour& contour) {
  std::string out;
  for (const Point& p : contour.vertices()) {
    out += format_real(p.x);
    out += ' ';
    out += format_real(p.y);
    out += '\n';
  }
  return out;
}

PolyContour parse_boundary(std::string_view text) {
  std::vector<Point> v;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected \"x y\"",
                  static_cast<std::ptrdiff_t>(line_no));
    v.push_back({parse_real(fields[0], line_no), parse_real(fields[1], line_no)});
  }
  if (v.empty()) throw Error(ErrorCode::ParseError, "boundary file is empty");
  return PolyContour(std::move(v));
}

std::string format_chain(const ChainCode& code) { return code.to_string() + "\n"; }

ChainCode parse_chain(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorCode::ParseError, "chain code file is empty");
  if (body.find('\n') != std::string_view::npos)
    throw Error(ErrorCode::ParseError, "chain code file must hold a single line");
  return ChainCode::parse(body);
}

}  // namespace efa
