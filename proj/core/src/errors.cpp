#include "tubealg/errors.hpp"

namespace tubealg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::MissingFSymbols: return "MissingFSymbols";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::DegenerateBicharacter: return "DegenerateBicharacter";
    case ErrorCode::BadSquareRoot: return "BadSquareRoot";
    case ErrorCode::MultiplicityNotSupported: return "MultiplicityNotSupported";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::DaggerViolation: return "DaggerViolation";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonSemisimple: return "NonSemisimple";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::NonUnitaryCategory: return "NonUnitaryCategory";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::SectorMismatch: return "SectorMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::FileNotFound: return "FileNotFound";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace tubealg
