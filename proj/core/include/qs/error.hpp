#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qs {

enum class ErrorCode {
  MismatchedOrder,
  NotAUnit,
  NotDivisible,
  ShapeMismatch,
  NotEndomorphism,
  NotLinearOverBase,
  NotInvertible,
  SyntaxError,
  DuplicateName,
  UnknownVertex,
  EdgeLoopForbidden,
  LengthMismatch,
  NegativeDimension,
  SameVertex,
  TopSliceNotZero,
  NotInOrbit,
  InvalidSpec,
  EmptyLevelSet,
  NotInLevelSet,
  InvalidLeg,
  UnknownSuite,
  InvalidValue,
};

std::string_view to_string(ErrorCode code);

struct SourcePos {
  int line = 0;
  int column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, SourcePos pos);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

 private:
  ErrorCode code_;
  std::optional<SourcePos> pos_;
};

}  // namespace qs
