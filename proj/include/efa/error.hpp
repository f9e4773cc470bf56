#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace efa {

enum class ErrorCode {
  NotClosed,
  NotAdjacent,
  InvalidContour,
  DegenerateRuler,
  HarmonicOutOfRange,
  DegenerateFirstHarmonic,
  BadParameter,
  FlatImage,
  SeedOnBackground,
  EmptyMask,
  MultipleComponents,
  DegenerateBoundary,
  MixedHarmonicCounts,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library. `code` identifies the failure class;
/// `index` carries a position (link index, line number) where one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::ptrdiff_t index = -1)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::ptrdiff_t index_;
};

}  // namespace efa
