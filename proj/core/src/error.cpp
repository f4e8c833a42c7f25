#include "qs/error.hpp"

namespace qs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MismatchedOrder: return "MismatchedOrder";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotEndomorphism: return "NotEndomorphism";
    case ErrorCode::NotLinearOverBase: return "NotLinearOverBase";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::EdgeLoopForbidden: return "EdgeLoopForbidden";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeDimension: return "NegativeDimension";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::TopSliceNotZero: return "TopSliceNotZero";
    case ErrorCode::NotInOrbit: return "NotInOrbit";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorCode::NotInLevelSet: return "NotInLevelSet";
    case ErrorCode::InvalidLeg: return "InvalidLeg";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidValue: return "InvalidValue";
  }
  return "Unknown";
}

namespace {

std::string with_position(const std::string& message, SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, SourcePos pos)
    : std::runtime_error(with_position(message, pos)), code_(code), pos_(pos) {}

}  // namespace qs
