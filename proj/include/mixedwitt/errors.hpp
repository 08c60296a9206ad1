#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixedwitt {

enum class ErrorKind {
  NotMonic,
  NotSquarefree,
  ReducibleDetected,
  DegreeTooLarge,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  ZeroScale,
  ZeroSlot,
  ZeroArgument,
  NonRationalField,
  AlgebraMismatch,
  NotPure,
  NotInvertible,
  NoAnisotropicVector,
  WrongStratum,
  DegenerateReference,
  MissingReference,
  SearchBudgetExceeded,
  PartialPolarization,
  DomainMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this type; `kind()` is stable
/// and is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the byte offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& detail, std::size_t position)
      : Error(ErrorKind::ParseError, detail + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mixedwitt
