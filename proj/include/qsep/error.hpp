#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsep {

enum class ErrorKind {
  NonFinite,
  NonHermitian,
  NotHermitian,
  TraceNotOne,
  NotPSD,
  BadDimension,
  BadSubset,
  WrongArity,
  BadLabel,
  WrongDim,
  NotNormalized,
  OutOfRange,
  BadWay,
  BadParams,
  BadGamma,
  BadRange,
  NoConvergence,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this exception. Validation
// failures carry the measured violation in magnitude().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<double> magnitude = std::nullopt)
      : std::runtime_error(what), kind_(kind), magnitude_(magnitude) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<double> magnitude() const noexcept { return magnitude_; }

 private:
  ErrorKind kind_;
  std::optional<double> magnitude_;
};

}  // namespace qsep
