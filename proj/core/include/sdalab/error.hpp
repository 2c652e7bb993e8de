#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdalab {

enum class Errc {
  NoSignChange,
  NotSquareFree,
  PrecisionCapExceeded,
  DivisionByZero,
  SchemaError,
  ZeroPoint,
  TieUnresolved,
  DependentCoordinates,
  EmptySet,
  BeyondCertifiedRange,
  AmbientMismatch,
  InsufficientData,
  LevelOutOfRange,
  TooFewPoints,
  DomainError,
  SandwichViolated,
  DomainTooShort,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can report it in machine-readable form.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sdalab
