#pragma once

#include <string>
#include <utility>

#include "efa/efd.hpp"

namespace efa {

// Coefficient-space actions. Each corresponds to a geometric operation on the
// underlying curve; the harmonic matrix is [[a, b], [c, d]].

/// Rotates the curve by `angle` about the origin (left multiply by R(angle)).
EfdSet rotate_coeffs(const EfdSet& e, double angle);
/// Moves the start point forward by `fraction` of the period (t -> t + sT).
EfdSet shift_start(const EfdSet& e, double fraction);
/// Traverses the curve backwards (t -> -t): negates b_n and d_n.
EfdSet reverse_direction(const EfdSet& e);
/// Mirrors the curve in the x axis (y -> -y): negates c_n, d_n and C0.
EfdSet reflect_x(const EfdSet& e);
EfdSet scale_coeffs(const EfdSet& e, double factor);

enum class Orientation { clockwise, anticlockwise };

/// Cross product a1 d1 - c1 b1 of the first harmonic.
double omega(const EfdSet& e);
/// Throws DegenerateFirstHarmonic when the first ellipse collapses to a segment.
Orientation orientation(const EfdSet& e);

/// First-harmonic ellipse geometry. theta_t and theta_star are parametric
/// phases (the ellipse point at phase theta is (a1 cos + b1 sin, c1 cos + d1 sin));
/// axis_angle is the direction of that point measured from the x axis.
struct MajorAxis {
  double theta_t = 0.0;
  double theta_star = 0.0;
  double major_len = 0.0;
  double axis_angle = 0.0;
};

/// Radius of the first-harmonic ellipse at phase theta.
double ellipse_radius(const Harmonic& h, double theta);
MajorAxis major_axis(const EfdSet& e);

struct NormalizationReport {
  double omega = 0.0;
  double theta_t = 0.0;
  double theta_star = 0.0;
  double major_len = 0.0;
  bool reversed = false;
  double start_shift = 0.0;  // fraction of the period
  double rotation = 0.0;     // applied plane rotation, radians
  bool reflection_applied = false;
  bool halfshift_applied = false;
};

struct Normalized {
  EfdSet efd;
  NormalizationReport report;
};

/// Canonical descriptors invariant under translation, scale, rotation,
/// start point, traversal direction and mirror symmetry.
Normalized normalize_true(const EfdSet& e);

/// Size/rotation/translation/start-point normalization from the first
/// harmonic only; traversal direction and mirroring are left untouched.
EfdSet normalize_classic(const EfdSet& e);

/// Residual-symmetry tie tolerance used by the canonical ordering.
inline constexpr double kCanonicalTieTolerance = 1e-12;

std::string normalized_csv_header(int harmonics, bool with_label = false);
std::string normalized_csv_row(const Normalized& n);

}  // namespace efa
