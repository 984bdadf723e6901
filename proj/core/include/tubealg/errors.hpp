#pragma once

#include <stdexcept>
#include <string>

namespace tubealg {

enum class ErrorCode {
  ShapeError,
  NotHermitian,
  RankDeficient,
  MissingFSymbols,
  NotACocycle,
  DegenerateBicharacter,
  BadSquareRoot,
  MultiplicityNotSupported,
  AssociativityViolation,
  DaggerViolation,
  NonComposable,
  BasisMismatch,
  ShapeMismatch,
  NonSemisimple,
  UnknownCategory,
  AmbiguousMatch,
  NonUnitaryCategory,
  ZeroState,
  SectorMismatch,
  NotUnitary,
  InvalidArgument,
  SchemaError,
  FileNotFound,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tubealg
