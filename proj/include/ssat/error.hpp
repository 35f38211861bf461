#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssat {

enum class Errc {
  MissingVariable,
  DuplicateVariable,
  VariableOutOfRange,
  WidthMismatch,
  EmptyInstance,
  BlowupLimit,
  CapExceeded,
  OracleCapExceeded,
  PreconditionBreach,
  WitnessVerificationFailed,
  SyntaxError,
  DomainError,
  InvalidArgument,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

/// All library failures are reported through this type; `code()` names the
/// failure class and `what()` carries a human-readable message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code), detail_(message) {}

  Errc code() const noexcept { return code_; }
  /// Message without the leading code name.
  const std::string &detail() const noexcept { return detail_; }

private:
  Errc code_;
  std::string detail_;
};

} // namespace ssat
