#include "mixedwitt/errors.hpp"

namespace mixedwitt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotMonic:
      return "NotMonic";
    case ErrorKind::NotSquarefree:
      return "NotSquarefree";
    case ErrorKind::ReducibleDetected:
      return "ReducibleDetected";
    case ErrorKind::DegreeTooLarge:
      return "DegreeTooLarge";
    case ErrorKind::DivisionByZero:
      return "DivisionByZero";
    case ErrorKind::FieldMismatch:
      return "FieldMismatch";
    case ErrorKind::ZeroElement:
      return "ZeroElement";
    case ErrorKind::ZeroScale:
      return "ZeroScale";
    case ErrorKind::ZeroSlot:
      return "ZeroSlot";
    case ErrorKind::ZeroArgument:
      return "ZeroArgument";
    case ErrorKind::NonRationalField:
      return "NonRationalField";
    case ErrorKind::AlgebraMismatch:
      return "AlgebraMismatch";
    case ErrorKind::NotPure:
      return "NotPure";
    case ErrorKind::NotInvertible:
      return "NotInvertible";
    case ErrorKind::NoAnisotropicVector:
      return "NoAnisotropicVector";
    case ErrorKind::WrongStratum:
      return "WrongStratum";
    case ErrorKind::DegenerateReference:
      return "DegenerateReference";
    case ErrorKind::MissingReference:
      return "MissingReference";
    case ErrorKind::SearchBudgetExceeded:
      return "SearchBudgetExceeded";
    case ErrorKind::PartialPolarization:
      return "PartialPolarization";
    case ErrorKind::DomainMismatch:
      return "DomainMismatch";
    case ErrorKind::ParseError:
      return "ParseError";
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mixedwitt
