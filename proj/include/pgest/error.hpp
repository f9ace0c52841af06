#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgest {

enum class ErrorCode {
  NonFiniteValue,
  NonPositiveValue,
  NegativeValue,
  DistanceTooSmall,
  InvalidRadius,
  InvalidGeometry,
  ZeroFading,
  NegativeRatio,
  EmptySampleSet,
  InvalidConfig,
  InvalidTheta,
  NegativeInterference,
  IoError,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pgest
