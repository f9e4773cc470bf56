#pragma once

// Independent reference computations used only by tests. None of these call
// into the library's EFD, Otsu or eigen code paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "efa/contour.hpp"
#include "efa/efd.hpp"

namespace oracle {

struct Coeffs {
  double A0 = 0, C0 = 0;
  std::vector<std::array<double, 4>> h;  // (a, b, c, d) per harmonic
};

/// Position on the arc-length parametrized polygon at time t in [0, T).
inline efa::Point position(const std::vector<efa::Point>& v, const std::vector<double>& cum,
                           double t) {
  const std::size_t k = v.size();
  auto it = std::upper_bound(cum.begin(), cum.end(), t);
  std::size_t seg = static_cast<std::size_t>(it - cum.begin()) - 1;
  if (seg >= k) seg = k - 1;
  const efa::Point a = v[seg];
  const efa::Point b = v[(seg + 1) % k];
  const double len = cum[seg + 1] - cum[seg];
  const double u = (t - cum[seg]) / len;
  return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

inline std::vector<double> cumulative_times(const std::vector<efa::Point>& v) {
  std::vector<double> cum{0.0};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const efa::Point a = v[i], b = v[(i + 1) % v.size()];
    cum.push_back(cum.back() + std::hypot(b.x - a.x, b.y - a.y));
  }
  return cum;
}

/// Fourier coefficients by the periodic trapezoid rule with `samples` points.
inline Coeffs quadrature(const std::vector<efa::Point>& v, int harmonics, int samples) {
  const auto cum = cumulative_times(v);
  const double T = cum.back();
  std::vector<efa::Point> pts(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) pts[j] = position(v, cum, T * j / samples);
  Coeffs c;
  for (const auto& p : pts) {
    c.A0 += p.x;
    c.C0 += p.y;
  }
  c.A0 /= samples;
  c.C0 /= samples;
  for (int n = 1; n <= harmonics; ++n) {
    double a = 0, b = 0, cc = 0, d = 0;
    for (int j = 0; j < samples; ++j) {
      const double th = 2.0 * std::numbers::pi * n * j / samples;
      const double cs = std::cos(th), sn = std::sin(th);
      a += pts[j].x * cs;
      b += pts[j].x * sn;
      cc += pts[j].y * cs;
      d += pts[j].y * sn;
    }
    c.h.push_back({2.0 * a / samples, 2.0 * b / samples, 2.0 * cc / samples, 2.0 * d / samples});
  }
  return c;
}

/// Literal per-segment differences with a fresh cos/sin for every term.
inline Coeffs direct_sums(const std::vector<efa::Point>& v, int harmonics) {
  const auto cum = cumulative_times(v);
  const double T = cum.back();
  const std::size_t k = v.size();
  Coeffs c;
  for (std::size_t p = 0; p < k; ++p) {
    const efa::Point a = v[p], b = v[(p + 1) % k];
    const double dt = cum[p + 1] - cum[p];
    c.A0 += (a.x + b.x) * dt;
    c.C0 += (a.y + b.y) * dt;
  }
  c.A0 /= 2 * T;
  c.C0 /= 2 * T;
  for (int n = 1; n <= harmonics; ++n) {
    std::array<double, 4> s{};
    for (std::size_t p = 0; p < k; ++p) {
      const efa::Point a = v[p], b = v[(p + 1) % k];
      const double dt = cum[p + 1] - cum[p];
      const double w0 = 2 * std::numbers::pi * n * cum[p] / T;
      const double w1 = 2 * std::numbers::pi * n * cum[p + 1] / T;
      const double dc = std::cos(w1) - std::cos(w0);
      const double ds = std::sin(w1) - std::sin(w0);
      s[0] += (b.x - a.x) / dt * dc;
      s[1] += (b.x - a.x) / dt * ds;
      s[2] += (b.y - a.y) / dt * dc;
      s[3] += (b.y - a.y) / dt * ds;
    }
    const double f = T / (2.0 * n * n * std::numbers::pi * std::numbers::pi);
    c.h.push_back({f * s[0], f * s[1], f * s[2], f * s[3]});
  }
  return c;
}

/// Max |difference| relative to the largest magnitude coefficient.
inline double relative_error(const efa::EfdSet& e, const Coeffs& c) {
  double diff = std::max(std::abs(e.A0 - c.A0), std::abs(e.C0 - c.C0));
  double mag = std::max(std::abs(c.A0), std::abs(c.C0));
  for (int n = 1; n <= e.order(); ++n) {
    const auto& h = e.harmonic(n);
    const auto& o = c.h[n - 1];
    const double got[4] = {h.a, h.b, h.c, h.d};
    for (int i = 0; i < 4; ++i) {
      diff = std::max(diff, std::abs(got[i] - o[i]));
      mag = std::max(mag, std::abs(o[i]));
    }
  }
  return diff / mag;
}

/// Otsu by exhaustive scan: class weights, means and the between-class
/// variance recomputed from scratch for every candidate.
inline int otsu_scan(const std::vector<std::uint64_t>& hist) {
  long double best = -1;
  int best_k = -1;
  for (int k = 0; k < 256; ++k) {
    long double n0 = 0, n1 = 0, s0 = 0, s1 = 0;
    for (int v = 0; v < 256; ++v) {
      if (v <= k) {
        n0 += hist[v];
        s0 += static_cast<long double>(v) * hist[v];
      } else {
        n1 += hist[v];
        s1 += static_cast<long double>(v) * hist[v];
      }
    }
    if (n0 == 0 || n1 == 0) continue;
    const long double n = n0 + n1;
    const long double m0 = s0 / n0, m1 = s1 / n1;
    const long double between = (n0 / n) * (n1 / n) * (m0 - m1) * (m0 - m1);
    // relative guard so exact ties with floating noise resolve to the lowest k
    if (between > best * (1 + 1e-15L)) {
      best = between;
      best_k = k;
    }
  }
  return best_k;
}

/// Eigenvalues of a symmetric PSD matrix by power iteration with deflation.
inline std::vector<double> power_eigenvalues(std::vector<std::vector<double>> a, int count,
                                             std::vector<std::vector<double>>* vectors = nullptr) {
  const std::size_t n = a.size();
  std::vector<double> out;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int e = 0; e < count; ++e) {
    std::vector<double> x(n);
    for (auto& xi : x) xi = g(rng);
    double lambda = 0;
    for (int it = 0; it < 20000; ++it) {
      std::vector<double> y(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
      double norm = 0;
      for (double yi : y) norm += yi * yi;
      norm = std::sqrt(norm);
      if (norm == 0) break;
      for (auto& yi : y) yi /= norm;
      double change = 0;
      for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(std::abs(y[i]) - std::abs(x[i])));
      x = y;
      lambda = norm;
      if (change < 1e-15) break;
    }
    out.push_back(lambda);
    if (vectors) vectors->push_back(x);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= lambda * x[i] * x[j];
  }
  return out;
}

inline std::vector<efa::Point> random_polygon(std::mt19937_64& rng, int vertices) {
  // star-shaped so it stays simple: random radius per sorted angle
  std::uniform_real_distribution<double> r(0.5, 2.0), ang(0.0, 2 * std::numbers::pi);
  std::vector<double> angles(static_cast<std::size_t>(vertices));
  for (auto& a : angles) a = ang(rng);
  std::sort(angles.begin(), angles.end());
  std::vector<efa::Point> v;
  for (double a : angles) {
    const double rr = r(rng);
    v.push_back({rr * std::cos(a) + 0.3, rr * std::sin(a) - 0.7});
  }
  return v;
}

/// Shortest distance from p to the closed polygon's edges.
inline double distance_to_polygon(const std::vector<efa::Point>& v, efa::Point p) {
  double best = INFINITY;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const efa::Point a = v[i], b = v[(i + 1) % v.size()];
    const double ex = b.x - a.x, ey = b.y - a.y;
    double u = ((p.x - a.x) * ex + (p.y - a.y) * ey) / (ex * ex + ey * ey);
    u = std::clamp(u, 0.0, 1.0);
    best = std::min(best, std::hypot(p.x - a.x - u * ex, p.y - a.y - u * ey));
  }
  return best;
}

/// RMS distance between reconstruction samples and the source curve at the
/// same parameter values.
inline double l2_error(const std::vector<efa::Point>& v, const std::vector<efa::Point>& rec) {
  const auto cum = cumulative_times(v);
  const double T = cum.back();
  double acc = 0;
  for (std::size_t j = 0; j < rec.size(); ++j) {
    const auto p = position(v, cum, T * static_cast<double>(j) / static_cast<double>(rec.size()));
    acc += (p.x - rec[j].x) * (p.x - rec[j].x) + (p.y - rec[j].y) * (p.y - rec[j].y);
  }
  return std::sqrt(acc / static_cast<double>(rec.size()));
}

}  // namespace oracle
