#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "efa/contour.hpp"
#include "efa/efd.hpp"
#include "efa/error.hpp"
#include "efa/normalize.hpp"
#include "efa/transforms.hpp"
#include "oracles.hpp"

using namespace efa;
using std::numbers::pi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an efa::Error");
  return ErrorCode::IoError;
}

const double kQ = 4.0 / (pi * pi);

EfdSet square_efd(int n = 35) { return compute_harmonics(ChainCode::parse("0246"), n); }

}  // namespace

TEST_CASE("DC components") {
  auto dc = compute_dc(ChainCode::parse("0246"));
  CHECK(dc.A0 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(dc.C0 == doctest::Approx(0.5).epsilon(1e-15));
  dc = compute_dc(ChainCode::parse("01234567"));
  CHECK(dc.A0 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dc.C0 == doctest::Approx(1.5).epsilon(1e-14));
  dc = compute_dc(ChainCode::parse("0246", {10, 20}));
  CHECK(dc.A0 == doctest::Approx(10.5).epsilon(1e-15));
  CHECK(dc.C0 == doctest::Approx(20.5).epsilon(1e-15));
  const auto poly = compute_dc(chain_to_contour(ChainCode::parse("0246", {10, 20})));
  CHECK(poly.A0 == doctest::Approx(10.5).epsilon(1e-15));
}

TEST_CASE("square first harmonic matches the closed form") {
  const auto e = square_efd();
  const auto& h = e.harmonic(1);
  CHECK(std::abs(h.a + kQ) < 1e-12);
  CHECK(std::abs(h.b - kQ) < 1e-12);
  CHECK(std::abs(h.c + kQ) < 1e-12);
  CHECK(std::abs(h.d + kQ) < 1e-12);
  for (int n = 2; n <= 35; n += 2) {
    const auto& g = e.harmonic(n);
    CHECK(std::abs(g.a) < 1e-12);
    CHECK(std::abs(g.b) < 1e-12);
    CHECK(std::abs(g.c) < 1e-12);
    CHECK(std::abs(g.d) < 1e-12);
  }
}

TEST_CASE("square coefficients agree with quadrature and literal sums") {
  const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto e = compute_harmonics(PolyContour(sq), 35);
  CHECK(oracle::relative_error(e, oracle::quadrature(sq, 35, 1 << 16)) < 1e-6);
  CHECK(oracle::relative_error(e, oracle::direct_sums(sq, 35)) < 1e-12);
  // the oracle reproduces the closed-form first harmonic on its own
  const auto q = oracle::quadrature(sq, 1, 1 << 16);
  CHECK(std::abs(q.h[0][0] + kQ) < 1e-8);
  CHECK(std::abs(q.h[0][1] - kQ) < 1e-8);
}

TEST_CASE("chain code and polygon inputs give the same descriptors") {
  const auto code = ChainCode::parse("0011223344556677", {2, -3});
  const auto a = compute_harmonics(code, 20);
  const auto b = compute_harmonics(chain_to_contour(code), 20);
  CHECK(max_deviation(a, b) < 1e-13);
}

TEST_CASE("dense circle polygon has a single first-order term") {
  const auto e = compute_harmonics(regular_polygon(4096), 5);
  const auto& h = e.harmonic(1);
  CHECK(std::abs(h.a - 1) < 1e-5);
  CHECK(std::abs(h.b) < 1e-5);
  CHECK(std::abs(h.c) < 1e-5);
  CHECK(std::abs(h.d - 1) < 1e-5);
  for (int n = 2; n <= 5; ++n) {
    const auto& g = e.harmonic(n);
    CHECK(std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d)}) < 1e-4);
  }
}

TEST_CASE("harmonic count must be positive") {
  CHECK(code_of([] { square_efd(0); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { compute_harmonics(ChainCode::parse("02")); }) == ErrorCode::NotClosed);
  CHECK(code_of([] { compute_harmonics(ChainCode{}); }) == ErrorCode::InvalidContour);
}

TEST_CASE("reconstruct") {
  EfdSet circle;
  circle.harmonics = {{1, 0, 0, 1}};
  for (const auto& p : reconstruct(circle, 1, 64))
    CHECK(std::hypot(p.x, p.y) == doctest::Approx(1.0).epsilon(1e-14));

  const auto e = square_efd();
  const double r = 4 * std::sqrt(2.0) / (pi * pi);
  for (const auto& p : reconstruct(e, 1, 256))
    CHECK(std::hypot(p.x - 0.5, p.y - 0.5) == doctest::Approx(r).epsilon(1e-12));

  const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  double worst = 0;
  for (const auto& p : reconstruct(e, 35, 2048))
    worst = std::max(worst, oracle::distance_to_polygon(sq, p));
  CHECK(worst < 0.01);

  CHECK(code_of([&] { reconstruct(e, 36); }) == ErrorCode::HarmonicOutOfRange);
  CHECK(code_of([&] { reconstruct(e, 0); }) == ErrorCode::HarmonicOutOfRange);
  CHECK(code_of([&] { reconstruct(e, 5, 7); }) == ErrorCode::BadParameter);
}

TEST_CASE("property: quadrature oracle on random polygons") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const auto v = oracle::random_polygon(rng, 50);
    const auto e = compute_harmonics(PolyContour(v), 35);
    CHECK(oracle::relative_error(e, oracle::quadrature(v, 35, 1 << 16)) < 1e-6);
    CHECK(oracle::relative_error(e, oracle::direct_sums(v, 35)) < 1e-11);
  }
}

TEST_CASE("property: reconstruction error is non-increasing in the order") {
  for (const auto& shape : builtin_corpus()) {
    CAPTURE(shape.name);
    const auto e = compute_harmonics(shape.contour, 35);
    double prev = INFINITY;
    for (int n = 1; n <= 35; ++n) {
      const double err = oracle::l2_error(shape.contour.vertices(), reconstruct(e, n, 4096));
      CHECK(err <= prev * (1 + 1e-9));
      prev = err;
    }
  }
}

TEST_CASE("property: tail energy is below head energy") {
  for (const auto& shape : builtin_corpus()) {
    CAPTURE(shape.name);
    const auto e = compute_harmonics(shape.contour, 35);
    auto energy = [&](int from, int to) {
      double s = 0;
      for (int n = from; n <= to; ++n) {
        const auto& h = e.harmonic(n);
        s += h.a * h.a + h.b * h.b + h.c * h.c + h.d * h.d;
      }
      return s;
    };
    CHECK(energy(31, 35) < energy(1, 5));
  }
}

TEST_CASE("property: scaling is linear, rotation and vertex shift act by group actions") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = oracle::random_polygon(rng, 30);
    const PolyContour c(v);
    const auto e = compute_harmonics(c, 20);

    const double k = 0.25 + trial;
    const auto scaled = compute_harmonics(apply(c, {TransformKind::scaling_up, k}), 20);
    CHECK(max_deviation(scaled, scale_coeffs(e, k)) < 1e-12 * k * 10);

    const double phi = angle(rng);
    const auto rotated =
        compute_harmonics(apply(c, {TransformKind::anticlockwise_rotation, phi}), 20);
    CHECK(max_deviation(rotated, rotate_coeffs(e, phi)) < 1e-9);

    const int shift = 1 + trial;
    const auto shifted = compute_harmonics(
        apply(c, {TransformKind::start_point_shift, static_cast<double>(shift)}), 20);
    double offset = 0;
    for (int i = 0; i < shift; ++i)
      offset += std::hypot(v[i + 1].x - v[i].x, v[i + 1].y - v[i].y);
    auto expected = shift_start(e, offset / c.period());
    // the start shift does not move the mean position
    CHECK(std::abs(shifted.A0 - e.A0) < 1e-12);
    CHECK(max_deviation(shifted, expected) < 1e-9);
  }
}

TEST_CASE("EFD CSV round trip") {
  const auto e = square_efd(3);
  const std::string text = efd_csv_header(3) + "\n" + efd_csv_row(e) + "\n";
  CHECK(text.rfind("A0,C0,a1,b1,c1,d1,a2,b2,c2,d2,a3,b3,c3,d3\n", 0) == 0);
  const auto recs = parse_efd_csv(text);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].efd.harmonics == e.harmonics);
  CHECK(recs[0].efd.A0 == e.A0);

  const std::string labelled =
      "# note\n" + efd_csv_header(3, true) + "\nsq," + efd_csv_row(e) + "\n";
  const auto l = parse_efd_csv(labelled);
  CHECK(l[0].label == "sq");
  CHECK(l[0].efd.harmonics == e.harmonics);

  CHECK(code_of([] { parse_efd_csv(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_efd_csv("x,y\n1,2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_efd_csv("A0,C0,a1,b1,c1,d1\n1,2,3\n"); }) == ErrorCode::ParseError);
}
