#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmac {

/// Failure categories surfaced by the library. The kebab-case identifier
/// returned by error_kind_name() is stable and used verbatim in CLI stderr
/// output, so treat it as part of the public interface.
enum class ErrorKind {
    DimensionMismatch,
    InvalidDistribution,
    ParameterOutOfRange,
    EnumerationLimit,
    DegenerateDual,
    InvalidOrder,
    AllLikelihoodsZero,
    DomainError,
    IoError,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

} // namespace qmac
