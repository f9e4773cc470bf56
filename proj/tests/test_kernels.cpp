#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "efa/efd.hpp"
#include "efa/error.hpp"
#include "efa/kernels/kernels.hpp"
#include "efa/segment.hpp"
#include "efa/transforms.hpp"
#include "oracles.hpp"

using namespace efa;
namespace k = efa::kernels;

namespace {

struct BackendGuard {
  k::Backend saved = k::active_backend();
  ~BackendGuard() { k::select(saved); }
};

std::vector<k::Backend> backends() {
  std::vector<k::Backend> out{k::Backend::scalar};
  if (k::available(k::Backend::avx2)) out.push_back(k::Backend::avx2);
  return out;
}

struct Phases {
  std::vector<double> c, s, wx, wy;
};

Phases random_phases(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi), w(-2, 2);
  Phases p;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = ang(rng);
    p.c.push_back(std::cos(a));
    p.s.push_back(std::sin(a));
    p.wx.push_back(w(rng));
    p.wy.push_back(w(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("scalar backend is always available and selectable") {
  BackendGuard guard;
  CHECK(k::available(k::Backend::scalar));
  k::select(k::Backend::scalar);
  CHECK(k::active_backend() == k::Backend::scalar);
  CHECK(&k::active() == &k::scalar_table());
  CHECK(k::to_string(k::Backend::avx2) == "avx2");
  if (!k::available(k::Backend::avx2)) {
    bool threw = false;
    try {
      k::select(k::Backend::avx2);
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::BadParameter;
    }
    CHECK(threw);
  }
}

TEST_CASE("harmonic sums agree across backends") {
  std::mt19937_64 rng(1);
  const auto& ref = k::scalar_table();
  for (auto b : backends()) {
    CAPTURE(k::to_string(b));
    const auto& t = k::table(b);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 31u, 100u, 1001u}) {
      const auto p = random_phases(rng, n);
      for (int h : {1, 3, 35}) {
        std::vector<double> a(4 * h), c(4 * h);
        ref.harmonic_sums(p.c, p.s, p.wx, p.wy, h, a);
        t.harmonic_sums(p.c, p.s, p.wx, p.wy, h, c);
        double scale = 0;
        for (double v : p.wx) scale += std::abs(v);
        for (double v : p.wy) scale += std::abs(v);
        for (int i = 0; i < 4 * h; ++i) CHECK(std::abs(a[i] - c[i]) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("harmonic sums match direct trigonometry") {
  std::mt19937_64 rng(2);
  const auto p = random_phases(rng, 57);
  for (auto b : backends()) {
    CAPTURE(k::to_string(b));
    std::vector<double> out(4 * 20);
    k::table(b).harmonic_sums(p.c, p.s, p.wx, p.wy, 20, out);
    for (int n = 1; n <= 20; ++n) {
      double s[4] = {};
      for (std::size_t i = 0; i < p.c.size(); ++i) {
        const double phi = std::atan2(p.s[i], p.c[i]);
        s[0] += p.wx[i] * std::cos(n * phi);
        s[1] += p.wx[i] * std::sin(n * phi);
        s[2] += p.wy[i] * std::cos(n * phi);
        s[3] += p.wy[i] * std::sin(n * phi);
      }
      for (int j = 0; j < 4; ++j) CHECK(std::abs(out[4 * (n - 1) + j] - s[j]) < 1e-11);
    }
  }
}

TEST_CASE("series evaluation agrees across backends") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  const auto& ref = k::scalar_table();
  for (auto b : backends()) {
    CAPTURE(k::to_string(b));
    for (std::size_t m : {1u, 3u, 4u, 9u, 64u, 1027u}) {
      const auto p = random_phases(rng, m);
      for (int h : {1, 2, 35}) {
        std::vector<double> coeffs(4 * h);
        for (auto& c : coeffs) c = g(rng);
        std::vector<double> x1(m), y1(m), x2(m), y2(m);
        ref.evaluate_series(coeffs, h, 0.5, -2, p.c, p.s, x1, y1);
        k::table(b).evaluate_series(coeffs, h, 0.5, -2, p.c, p.s, x2, y2);
        for (std::size_t j = 0; j < m; ++j) {
          CHECK(std::abs(x1[j] - x2[j]) < 1e-11);
          CHECK(std::abs(y1[j] - y2[j]) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("morphology rows are bit-identical across backends") {
  std::mt19937_64 rng(4);
  std::bernoulli_distribution bit(0.7);
  for (auto b : backends()) {
    CAPTURE(k::to_string(b));
    for (std::size_t w : {1u, 2u, 15u, 16u, 17u, 31u, 32u, 33u, 100u, 257u}) {
      std::vector<std::uint8_t> rows[3];
      for (auto& r : rows) {
        r.assign(w + 2, 0);
        for (std::size_t i = 1; i <= w; ++i) r[i] = bit(rng) ? 1 : 0;
      }
      for (auto op : {k::MorphOp::erode, k::MorphOp::dilate}) {
        std::vector<std::uint8_t> a(w), c(w);
        k::scalar_table().morph_row(op, rows[0].data(), rows[1].data(), rows[2].data(), a.data(), w);
        k::table(b).morph_row(op, rows[0].data(), rows[1].data(), rows[2].data(), c.data(), w);
        CHECK(a == c);
      }
    }
  }
}

TEST_CASE("library results agree across backends") {
  BackendGuard guard;
  std::mt19937_64 rng(5);
  const auto v = oracle::random_polygon(rng, 333);
  const PolyContour c(v);
  std::vector<EfdSet> results;
  std::vector<std::vector<Point>> recs;
  std::vector<BinaryMask> masks;
  BinaryMask m(53, 41);
  std::bernoulli_distribution bit(0.6);
  for (int r = 0; r < 41; ++r)
    for (int col = 0; col < 53; ++col) m.set(col, r, bit(rng));
  for (auto b : backends()) {
    k::select(b);
    results.push_back(compute_harmonics(c, 35));
    recs.push_back(reconstruct(results.back(), 35, 777));
    masks.push_back(dilate(erode(m, 1), 2));
  }
  for (std::size_t i = 1; i < results.size(); ++i) {
    CHECK(max_deviation(results[i], results[0]) < 1e-12);
    for (std::size_t j = 0; j < recs[0].size(); ++j) {
      CHECK(std::abs(recs[i][j].x - recs[0][j].x) < 1e-11);
      CHECK(std::abs(recs[i][j].y - recs[0][j].y) < 1e-11);
    }
    CHECK(masks[i] == masks[0]);
  }
}
