#include "efa/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "efa/error.hpp"
#include "efa/normalize.hpp"
#include "efa/text_io.hpp"

namespace efa {

namespace {

constexpr std::array<std::string_view, 9> kNames = {
    "original",          "translation", "anticlockwise_rotation",
    "scaling_up",        "start_point_shift", "x_symmetric",
    "y_symmetric",       "scaling_down", "reversed"};

}  // namespace

std::string_view to_string(TransformKind k) { return kNames[static_cast<std::size_t>(k)]; }

std::optional<TransformKind> parse_transform_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<TransformKind>(i);
  return std::nullopt;
}

PolyContour apply(const PolyContour& c, const TransformSpec& t) {
  std::vector<Point> v = c.vertices();
  switch (t.kind) {
    case TransformKind::original:
      break;
    case TransformKind::translation:
      for (Point& p : v) p = {p.x + t.dx, p.y + t.dy};
      break;
    case TransformKind::anticlockwise_rotation: {
      const double cs = std::cos(t.value);
      const double sn = std::sin(t.value);
      for (Point& p : v) p = {cs * p.x - sn * p.y, sn * p.x + cs * p.y};
      break;
    }
    case TransformKind::scaling_up:
    case TransformKind::scaling_down:
      if (!(t.value > 0.0))
        throw Error(ErrorCode::BadParameter, "scale factor must be positive");
      for (Point& p : v) p = {p.x * t.value, p.y * t.value};
      break;
    case TransformKind::start_point_shift: {
      const double k = t.value;
      if (k < 0.0 || k >= static_cast<double>(v.size()) || k != std::floor(k))
        throw Error(ErrorCode::BadParameter,
                    "start shift must be a vertex count in [0, K)");
      std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
      break;
    }
    case TransformKind::x_symmetric:
      for (Point& p : v) p.y = -p.y;
      break;
    case TransformKind::y_symmetric:
      for (Point& p : v) p.x = -p.x;
      break;
    case TransformKind::reversed:
      std::reverse(v.begin(), v.end());
      break;
  }
  return PolyContour(std::move(v));
}

std::array<TransformSpec, 9> default_suite_specs(const PolyContour& c) {
  const double shift = static_cast<double>(c.size() / 3);
  return {{
      {TransformKind::original},
      {TransformKind::translation, 0.0, 17.0, -5.0},
      {TransformKind::anticlockwise_rotation, std::numbers::pi / 3.0},
      {TransformKind::scaling_up, 2.5},
      {TransformKind::start_point_shift, shift},
      {TransformKind::x_symmetric},
      {TransformKind::y_symmetric},
      {TransformKind::scaling_down, 0.4},
      {TransformKind::reversed},
  }};
}

std::array<TransformSpec, 9> random_suite_specs(const PolyContour& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(-100.0, 100.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> up(1.1, 10.0);
  std::uniform_real_distribution<double> down(0.05, 0.9);
  std::uniform_int_distribution<std::size_t> shift(1, c.size() - 1);
  auto specs = default_suite_specs(c);
  specs[1].dx = offset(rng);
  specs[1].dy = offset(rng);
  specs[2].value = angle(rng);
  specs[3].value = up(rng);
  specs[4].value = static_cast<double>(shift(rng));
  specs[7].value = down(rng);
  return specs;
}

std::vector<PolyContour> nine_suite(const PolyContour& c) {
  return nine_suite(c, default_suite_specs(c));
}

std::vector<PolyContour> nine_suite(const PolyContour& c,
                                    const std::array<TransformSpec, 9>& specs) {
  if (c.size() < 4)
    throw Error(ErrorCode::BadParameter, "the transformation suite needs >= 4 vertices");
  std::vector<PolyContour> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(apply(c, s));
  return out;
}

int AuditReport::true_passes() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [](const AuditRow& r) { return r.true_pass(); }));
}

int AuditReport::classic_passes() const {
  return static_cast<int>(std::count_if(
      rows.begin(), rows.end(), [](const AuditRow& r) { return r.classic_pass(); }));
}

double max_deviation(const EfdSet& lhs, const EfdSet& rhs) {
  if (lhs.order() != rhs.order())
    throw Error(ErrorCode::MixedHarmonicCounts, "descriptor sets differ in order");
  double m = std::max(std::abs(lhs.A0 - rhs.A0), std::abs(lhs.C0 - rhs.C0));
  for (int n = 1; n <= lhs.order(); ++n) {
    const Harmonic& p = lhs.harmonic(n);
    const Harmonic& q = rhs.harmonic(n);
    m = std::max({m, std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c),
                  std::abs(p.d - q.d)});
  }
  return m;
}

AuditReport invariance_audit(const PolyContour& c, int harmonics) {
  return invariance_audit(c, harmonics, default_suite_specs(c));
}

AuditReport invariance_audit(const PolyContour& c, int harmonics,
                             const std::array<TransformSpec, 9>& specs) {
  const auto suite = nine_suite(c, specs);
  AuditReport r;
  r.harmonics = harmonics;
  std::vector<EfdSet> trues, classics;
  for (const auto& s : suite) {
    const EfdSet e = compute_harmonics(s, harmonics);
    trues.push_back(normalize_true(e).efd);
    classics.push_back(normalize_classic(e));
  }
  for (std::size_t i = 0; i < suite.size(); ++i)
    r.rows.push_back({specs[i].kind, max_deviation(trues[i], trues[0]),
                      max_deviation(classics[i], classics[0])});
  return r;
}

std::string format_audit_table(const AuditReport& r, std::string_view title) {
  std::string out;
  if (!title.empty()) out += std::string(title) + "\n";
  out += "harmonics: " + std::to_string(r.harmonics) + ", tolerance: 1e-08\n";
  out += "transformation           true  max_dev                  classic  max_dev\n";
  for (const AuditRow& row : r.rows) {
    std::string name(to_string(row.kind));
    name.resize(25, ' ');
    std::string tdev = format_real(row.true_deviation);
    tdev.resize(24, ' ');
    out += name + (row.true_pass() ? "√" : "×") + "     " + tdev + " " +
           (row.classic_pass() ? "√" : "×") + "        " +
           format_real(row.classic_deviation) + "\n";
  }
  out += "true: " + std::to_string(r.true_passes()) + "/" + std::to_string(r.rows.size()) +
         ", classic: " + std::to_string(r.classic_passes()) + "/" +
         std::to_string(r.rows.size()) + "\n";
  return out;
}

std::string format_audit_csv(const AuditReport& r) {
  std::string out = "transformation,true_max_dev,true_pass,classic_max_dev,classic_pass\n";
  for (const AuditRow& row : r.rows)
    out += std::string(to_string(row.kind)) + "," + format_real(row.true_deviation) + "," +
           (row.true_pass() ? "1" : "0") + "," + format_real(row.classic_deviation) + "," +
           (row.classic_pass() ? "1" : "0") + "\n";
  return out;
}

}  // namespace efa
