#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netlines {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct EmptyDataset : Error { using Error::Error; };

struct ConstantFeature : Error {
  explicit ConstantFeature(std::size_t feature_index)
      : Error("feature " + std::to_string(feature_index) +
              " is constant; remove the column before fitting"),
        feature(feature_index) {}
  std::size_t feature;
};

struct DegenerateWeights : Error { using Error::Error; };
struct ZeroWeights : Error { using Error::Error; };
struct NonPositiveTemperature : Error { using Error::Error; };
struct NoWronglyLearnedPattern : Error { using Error::Error; };
struct FallbackExhausted : Error { using Error::Error; };
struct ConflictingLabels : Error { using Error::Error; };
struct DegenerateClass : Error { using Error::Error; };
struct BadDensity : Error { using Error::Error; };
struct NOutOfRange : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(std::size_t line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  std::size_t line;
};

}  // namespace netlines
