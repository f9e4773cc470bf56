#include "efa/error.hpp"

namespace efa {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::InvalidContour: return "InvalidContour";
    case ErrorCode::DegenerateRuler: return "DegenerateRuler";
    case ErrorCode::HarmonicOutOfRange: return "HarmonicOutOfRange";
    case ErrorCode::DegenerateFirstHarmonic: return "DegenerateFirstHarmonic";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::FlatImage: return "FlatImage";
    case ErrorCode::SeedOnBackground: return "SeedOnBackground";
    case ErrorCode::EmptyMask: return "EmptyMask";
    case ErrorCode::MultipleComponents: return "MultipleComponents";
    case ErrorCode::DegenerateBoundary: return "DegenerateBoundary";
    case ErrorCode::MixedHarmonicCounts: return "MixedHarmonicCounts";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace efa
