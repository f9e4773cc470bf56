#include <cmath>
#include <numbers>

#include "efa/transforms.hpp"

namespace efa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class F>
PolyContour sampled(int count, F&& f) {
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v.push_back(f(kTwoPi * i / count));
  return PolyContour(std::move(v));
}

// Epitrochoid lobes, stretched and bent so no mirror or rotation symmetry survives.
PolyContour lobed_leaf() {
  return sampled(400, [](double t) {
    const double bx = 6.0 * std::cos(t) - 0.6 * std::cos(6.0 * t);
    const double by = 6.0 * std::sin(t) - 0.6 * std::sin(6.0 * t);
    return Point{1.6 * bx, by + 0.04 * bx * bx + 0.3 * std::sin(2.0 * t)};
  });
}

PolyContour blob() {
  return sampled(240, [](double t) {
    const double r = 1.0 + 0.25 * std::cos(2.0 * t + 0.4) +
                     0.15 * std::sin(3.0 * t + 1.1) + 0.07 * std::cos(5.0 * t + 2.0);
    return Point{1.3 * r * std::cos(t) + 0.2, r * std::sin(t)};
  });
}

// Shell, head, four legs and a tail; concave and without symmetry.
PolyContour turtle() {
  return PolyContour({{0.0, 0.0},   {2.0, -0.5},  {3.0, -1.5}, {3.6, -1.2},
                      {3.2, -0.3},  {4.5, 0.2},   {5.5, 0.1},  {6.2, 0.6},
                      {6.0, 1.3},   {5.2, 1.5},   {4.4, 1.6},  {3.4, 2.4},
                      {3.9, 3.1},   {3.1, 3.3},   {2.3, 2.6},  {0.8, 2.7},
                      {0.1, 3.4},   {-0.6, 3.0},  {-0.3, 2.1}, {-1.2, 1.6},
                      {-2.0, 1.5},  {-1.3, 1.0},  {-1.0, 0.3}, {-1.6, -0.5},
                      {-0.8, -0.9}});
}

}  // namespace

PolyContour regular_polygon(int sides, double radius) {
  return sampled(sides, [radius](double t) {
    return Point{radius * std::cos(t), radius * std::sin(t)};
  });
}

PolyContour ellipse_polygon(double semi_x, double semi_y, int vertices) {
  return sampled(vertices, [=](double t) {
    return Point{semi_x * std::cos(t), semi_y * std::sin(t)};
  });
}

std::vector<NamedShape> builtin_corpus() {
  std::vector<NamedShape> c;
  c.push_back({"square", chain_to_contour(ChainCode::parse("0246"))});
  c.push_back({"octagon", chain_to_contour(ChainCode::parse("01234567"))});
  c.push_back({"ellipse", ellipse_polygon(2.0, 1.0, 720)});
  c.push_back({"leaf", lobed_leaf()});
  c.push_back({"blob", blob()});
  c.push_back({"turtle", turtle()});
  return c;
}

}  // namespace efa
