#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efa/contour.hpp"
#include "efa/efd.hpp"

namespace efa {

enum class TransformKind {
  original,
  translation,
  anticlockwise_rotation,
  scaling_up,
  start_point_shift,
  x_symmetric,
  y_symmetric,
  scaling_down,
  reversed,
};

inline constexpr std::array<TransformKind, 9> kAllTransforms = {
    TransformKind::original,      TransformKind::translation,
    TransformKind::anticlockwise_rotation, TransformKind::scaling_up,
    TransformKind::start_point_shift, TransformKind::x_symmetric,
    TransformKind::y_symmetric,   TransformKind::scaling_down,
    TransformKind::reversed};

std::string_view to_string(TransformKind k);
std::optional<TransformKind> parse_transform_kind(std::string_view name);

/// `value` is the rotation angle, scale factor or vertex shift count;
/// translation uses (dx, dy).
struct TransformSpec {
  TransformKind kind = TransformKind::original;
  double value = 0.0;
  double dx = 0.0;
  double dy = 0.0;
};

PolyContour apply(const PolyContour& c, const TransformSpec& t);

/// The fixed nine-variant set, in kAllTransforms order.
std::array<TransformSpec, 9> default_suite_specs(const PolyContour& c);
/// Randomized parameters for fuzzing; deterministic for a given seed.
std::array<TransformSpec, 9> random_suite_specs(const PolyContour& c, std::uint64_t seed);

std::vector<PolyContour> nine_suite(const PolyContour& c);
std::vector<PolyContour> nine_suite(const PolyContour& c,
                                    const std::array<TransformSpec, 9>& specs);

inline constexpr double kInvarianceTolerance = 1e-8;

struct AuditRow {
  TransformKind kind;
  double true_deviation = 0.0;
  double classic_deviation = 0.0;
  bool true_pass() const { return true_deviation < kInvarianceTolerance; }
  bool classic_pass() const { return classic_deviation < kInvarianceTolerance; }
};

struct AuditReport {
  int harmonics = 0;
  std::vector<AuditRow> rows;  // nine, suite order
  int true_passes() const;
  int classic_passes() const;
};

/// Max |coefficient difference| (DC included) between two sets of equal order.
double max_deviation(const EfdSet& lhs, const EfdSet& rhs);

AuditReport invariance_audit(const PolyContour& c, int harmonics = kDefaultHarmonics);
AuditReport invariance_audit(const PolyContour& c, int harmonics,
                             const std::array<TransformSpec, 9>& specs);

/// Plain-text grid with one column per transformation.
std::string format_audit_table(const AuditReport& r, std::string_view title = {});
std::string format_audit_csv(const AuditReport& r);

// Built-in synthetic shapes.
struct NamedShape {
  std::string name;
  PolyContour contour;
};

std::vector<NamedShape> builtin_corpus();
/// Regular polygon on the unit circle, anticlockwise, first vertex at (1, 0).
PolyContour regular_polygon(int sides, double radius = 1.0);
PolyContour ellipse_polygon(double semi_x, double semi_y, int vertices);

}  // namespace efa
