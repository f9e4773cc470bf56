#include "efa/normalize.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "efa/error.hpp"
#include "efa/text_io.hpp"

namespace efa {

namespace {

constexpr double kPi = std::numbers::pi;

// |2(a1b1 + c1d1)| and |a1^2 + c1^2 - b1^2 - d1^2| below this fraction of the
// first-harmonic energy mean the first ellipse is a circle.
constexpr double kCircularTolerance = 1e-10;
constexpr double kOmegaTolerance = 1e-12;

double energy(const Harmonic& h) { return h.a * h.a + h.b * h.b + h.c * h.c + h.d * h.d; }

void require_first_harmonic(const EfdSet& e) {
  if (e.order() < 1 || energy(e.harmonic(1)) == 0.0)
    throw Error(ErrorCode::DegenerateFirstHarmonic, "first harmonic is zero");
}

// Lexicographic comparison of harmonics 2..N with a per-entry tie tolerance.
bool lex_greater(const EfdSet& lhs, const EfdSet& rhs) {
  for (int n = 2; n <= lhs.order(); ++n) {
    const Harmonic& p = lhs.harmonic(n);
    const Harmonic& q = rhs.harmonic(n);
    for (auto [u, v] : {std::pair{p.a, q.a}, {p.b, q.b}, {p.c, q.c}, {p.d, q.d}}) {
      if (u > v + kCanonicalTieTolerance) return true;
      if (u < v - kCanonicalTieTolerance) return false;
    }
  }
  return false;
}

// Opposite major-axis endpoint as start: half-period shift plus a half turn.
EfdSet opposite_endpoint(const EfdSet& e) {
  EfdSet r = e;
  for (int n = 2; n <= r.order(); n += 2) {
    Harmonic& h = r.harmonic(n);
    h = {-h.a, -h.b, -h.c, -h.d};
  }
  r.A0 = -r.A0;
  r.C0 = -r.C0;
  return r;
}

// Mirror in the x axis followed by reversal: (a, -b, -c, d).
EfdSet mirror_reversed(const EfdSet& e) { return reverse_direction(reflect_x(e)); }

}  // namespace

EfdSet rotate_coeffs(const EfdSet& e, double angle) {
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  EfdSet r = e;
  r.A0 = cs * e.A0 - sn * e.C0;
  r.C0 = sn * e.A0 + cs * e.C0;
  for (Harmonic& h : r.harmonics) {
    const Harmonic o = h;
    h.a = cs * o.a - sn * o.c;
    h.b = cs * o.b - sn * o.d;
    h.c = sn * o.a + cs * o.c;
    h.d = sn * o.b + cs * o.d;
  }
  return r;
}

EfdSet shift_start(const EfdSet& e, double fraction) {
  EfdSet r = e;
  for (int n = 1; n <= r.order(); ++n) {
    const double th = 2.0 * kPi * n * fraction;
    const double cs = std::cos(th);
    const double sn = std::sin(th);
    Harmonic& h = r.harmonic(n);
    const Harmonic o = h;
    h.a = o.a * cs + o.b * sn;
    h.b = -o.a * sn + o.b * cs;
    h.c = o.c * cs + o.d * sn;
    h.d = -o.c * sn + o.d * cs;
  }
  return r;
}

EfdSet reverse_direction(const EfdSet& e) {
  EfdSet r = e;
  for (Harmonic& h : r.harmonics) {
    h.b = -h.b;
    h.d = -h.d;
  }
  return r;
}

EfdSet reflect_x(const EfdSet& e) {
  EfdSet r = e;
  r.C0 = -r.C0;
  for (Harmonic& h : r.harmonics) {
    h.c = -h.c;
    h.d = -h.d;
  }
  return r;
}

EfdSet scale_coeffs(const EfdSet& e, double factor) {
  EfdSet r = e;
  r.A0 *= factor;
  r.C0 *= factor;
  for (Harmonic& h : r.harmonics) h = {h.a * factor, h.b * factor, h.c * factor, h.d * factor};
  return r;
}

double omega(const EfdSet& e) {
  const Harmonic& h = e.harmonic(1);
  return h.a * h.d - h.c * h.b;
}

Orientation orientation(const EfdSet& e) {
  require_first_harmonic(e);
  const double w = omega(e);
  if (std::abs(w) <= kOmegaTolerance * energy(e.harmonic(1)))
    throw Error(ErrorCode::DegenerateFirstHarmonic,
                "first-harmonic ellipse collapses to a line segment");
  return w > 0.0 ? Orientation::anticlockwise : Orientation::clockwise;
}

double ellipse_radius(const Harmonic& h, double theta) {
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  const double d2 = (h.a * h.a + h.c * h.c) * cs * cs +
                    (h.a * h.b + h.c * h.d) * std::sin(2.0 * theta) +
                    (h.b * h.b + h.d * h.d) * sn * sn;
  return std::sqrt(std::max(d2, 0.0));
}

MajorAxis major_axis(const EfdSet& e) {
  require_first_harmonic(e);
  const Harmonic& h = e.harmonic(1);
  const double num = 2.0 * (h.a * h.b + h.c * h.d);
  const double den = h.a * h.a + h.c * h.c - h.b * h.b - h.d * h.d;
  const double scale = energy(h);

  MajorAxis m;
  if (std::abs(num) <= kCircularTolerance * scale &&
      std::abs(den) <= kCircularTolerance * scale) {
    m.theta_t = 0.0;
  } else {
    m.theta_t = 0.5 * std::atan2(num, den);
  }
  const double d_t = ellipse_radius(h, m.theta_t);
  const double d_perp = ellipse_radius(h, m.theta_t + kPi / 2.0);
  m.theta_star = d_t >= d_perp ? m.theta_t : m.theta_t + kPi / 2.0;
  m.major_len = ellipse_radius(h, m.theta_star);

  const double px = h.a * std::cos(m.theta_star) + h.b * std::sin(m.theta_star);
  const double py = h.c * std::cos(m.theta_star) + h.d * std::sin(m.theta_star);
  m.axis_angle = std::atan2(py, px);
  return m;
}

Normalized normalize_true(const EfdSet& input) {
  require_first_harmonic(input);
  NormalizationReport rep;
  rep.omega = omega(input);

  // (a) translation
  EfdSet e = input;
  e.A0 = 0.0;
  e.C0 = 0.0;

  // (b) anticlockwise heading
  if (orientation(e) == Orientation::clockwise) {
    e = reverse_direction(e);
    rep.reversed = true;
  }

  // (c) scale by the first-harmonic major axis
  const MajorAxis axis = major_axis(e);
  rep.theta_t = axis.theta_t;
  rep.theta_star = axis.theta_star;
  rep.major_len = axis.major_len;
  e = scale_coeffs(e, 1.0 / axis.major_len);

  // (d) major axis onto the x axis
  rep.rotation = -axis.axis_angle;
  e = rotate_coeffs(e, rep.rotation);

  // (e) start at the major-axis endpoint, now on the positive x axis
  const Harmonic& h1 = e.harmonic(1);
  rep.start_shift = std::atan2(h1.b, h1.a) / (2.0 * kPi);
  e = shift_start(e, rep.start_shift);

  // (f) pick the canonical member of the residual symmetry orbit
  const EfdSet half = opposite_endpoint(e);
  const std::array<EfdSet, 4> candidates = {e, half, mirror_reversed(e),
                                            mirror_reversed(half)};
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (lex_greater(candidates[i], candidates[best])) best = i;
  rep.halfshift_applied = best == 1 || best == 3;
  rep.reflection_applied = best == 2 || best == 3;
  return {candidates[best], rep};
}

EfdSet normalize_classic(const EfdSet& input) {
  require_first_harmonic(input);
  const Harmonic& h = input.harmonic(1);
  const double theta1 =
      0.5 * std::atan2(2.0 * (h.a * h.b + h.c * h.d),
                       h.a * h.a - h.b * h.b + h.c * h.c - h.d * h.d);
  EfdSet e = shift_start(input, theta1 / (2.0 * kPi));
  const Harmonic& s = e.harmonic(1);
  const double psi1 = std::atan2(s.c, s.a);
  const double semi_major = std::hypot(s.a, s.c);
  if (semi_major == 0.0)
    throw Error(ErrorCode::DegenerateFirstHarmonic, "first harmonic is zero");
  e = rotate_coeffs(e, -psi1);
  e = scale_coeffs(e, 1.0 / semi_major);
  e.A0 = 0.0;
  e.C0 = 0.0;
  return e;
}

std::string normalized_csv_header(int harmonics, bool with_label) {
  return efd_csv_header(harmonics, with_label) +
         ",omega,theta_star,major_len,reversed,halfshift_applied,reflection_applied";
}

std::string normalized_csv_row(const Normalized& n) {
  const auto& r = n.report;
  return efd_csv_row(n.efd) + "," + format_real(r.omega) + "," +
         format_real(r.theta_star) + "," + format_real(r.major_len) + "," +
         (r.reversed ? "1" : "0") + "," + (r.halfshift_applied ? "1" : "0") + "," +
         (r.reflection_applied ? "1" : "0");
}

}  // namespace efa
