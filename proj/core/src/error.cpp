#include "sdalab/error.hpp"

namespace sdalab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NoSignChange: return "NoSignChange";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::SchemaError: return "SchemaError";
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::TieUnresolved: return "TieUnresolved";
    case Errc::DependentCoordinates: return "DependentCoordinates";
    case Errc::EmptySet: return "EmptySet";
    case Errc::BeyondCertifiedRange: return "BeyondCertifiedRange";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::DomainError: return "DomainError";
    case Errc::SandwichViolated: return "SandwichViolated";
    case Errc::DomainTooShort: return "DomainTooShort";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sdalab
