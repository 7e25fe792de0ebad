#include "qmac/error.hpp"

namespace qmac {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::InvalidDistribution: return "invalid-distribution";
    case ErrorKind::ParameterOutOfRange: return "parameter-out-of-range";
    case ErrorKind::EnumerationLimit: return "enumeration-limit";
    case ErrorKind::DegenerateDual: return "degenerate-dual";
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::AllLikelihoodsZero: return "all-likelihoods-zero";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::IoError: return "io-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace qmac
