#include "hyperoct/error.hpp"

#include "hyperoct/rational.hpp"

namespace hyperoct {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DuplicateAbs: return "DuplicateAbs";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::OddParityCell: return "OddParityCell";
    case ErrorCode::EvenParityCell: return "EvenParityCell";
    case ErrorCode::DuplicateCell: return "DuplicateCell";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::Blocked: return "Blocked";
    case ErrorCode::ExponentTooSmall: return "ExponentTooSmall";
    case ErrorCode::PairingViolation: return "PairingViolation";
    case ErrorCode::NotCompact: return "NotCompact";
    case ErrorCode::PartTooLarge: return "PartTooLarge";
    case ErrorCode::NotEDiagram: return "NotEDiagram";
    case ErrorCode::TooManyParts: return "TooManyParts";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::DivisionInexact: return "DivisionInexact";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw Error(ErrorCode::Parse, "not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace hyperoct
