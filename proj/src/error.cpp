#include "dsum/error.hpp"

namespace dsum {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::NoSuchClass: return "NoSuchClass";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    }
    return "Unknown";
}

} // namespace dsum
