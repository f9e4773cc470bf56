#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "efa/contour.hpp"

namespace efa {

inline constexpr int kDefaultHarmonics = 35;
inline constexpr int kDefaultReconstructionSamples = 1024;

struct Harmonic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// DC pair plus harmonics n = 1..N; harmonic(n) is one-based.
struct EfdSet {
  double A0 = 0.0;
  double C0 = 0.0;
  std::vector<Harmonic> harmonics;

  int order() const { return static_cast<int>(harmonics.size()); }
  const Harmonic& harmonic(int n) const { return harmonics[n - 1]; }
  Harmonic& harmonic(int n) { return harmonics[n - 1]; }

  /// (a1, b1, c1, d1, ..., aN, bN, cN, dN).
  std::vector<double> flatten() const;
};

struct DcComponents {
  double A0 = 0.0;
  double C0 = 0.0;
};

DcComponents compute_dc(const PolyContour& contour);
DcComponents compute_dc(const ChainCode& code);

/// Closed-form descriptors of the piecewise-linear arc-length
/// parametrization; includes the DC pair. Throws BadParameter if N < 1.
EfdSet compute_harmonics(const PolyContour& contour, int harmonics = kDefaultHarmonics);
EfdSet compute_harmonics(const ChainCode& code, int harmonics = kDefaultHarmonics);

/// Samples the truncated series at `samples` uniform phases of one period.
/// Returns raw points; consecutive samples may coincide for degenerate sets,
/// so the result is not wrapped in a PolyContour.
std::vector<Point> reconstruct(const EfdSet& e, int n_use,
                               int samples = kDefaultReconstructionSamples);

// EFD CSV: header A0,C0,a1,b1,c1,d1,...; optional leading `label` column.
std::string efd_csv_header(int harmonics, bool with_label = false);
std::string efd_csv_row(const EfdSet& e);

struct EfdRecord {
  std::string label;
  EfdSet efd;
};

/// Reads every row; `#` lines are skipped, unknown trailing columns ignored.
std::vector<EfdRecord> parse_efd_csv(std::string_view text);

}  // namespace efa
