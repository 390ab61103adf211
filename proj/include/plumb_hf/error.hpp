#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plumb {

enum class ErrorCode {
  CycleDetected,
  DuplicateEdge,
  BadId,
  Disconnected,
  CycleCreated,
  OutOfRange,
  DegenerateFraction,
  NotCoprime,
  NonNegDefinite,
  BaseCase,
  IllegalMove,
  TooManyBadVertices,
  WeightTooLarge,
  DimensionMismatch,
  ParseError,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace plumb
