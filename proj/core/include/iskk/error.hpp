#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iskk {

  enum class ErrorCode {
    NotAssociative,
    NoUniqueInverse,
    IdempotentsDontCommute,
    BadUnit,
    BadZero,
    UnsupportedSize,
    UnknownBuilder,
    NotIdempotent,
    NotSubsemigroup,
    InvalidCoefficientAlgebra,
    NotEquivariant,
    NotCentral,
    InvalidAction,
    CenterDoesNotSplit,
    NonIntegralMultiplicity,
    NotSemisimple,
    HypothesesNotMet,
    ChainTooLong,
    NotEUnitary,
    MalformedInput,
    DimensionMismatch,
  };

  std::string_view to_string(ErrorCode code);

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace iskk
