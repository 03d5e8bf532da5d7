#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsum {

enum class ErrorKind {
    InvalidArgument,
    ZeroDenominator,
    NotInvertible,
    Inconsistent,
    NoRoot,
    NoSuchClass,
    SearchExhausted,
    NotCoprime,
    InvalidTarget,
    MalformedCertificate,
    TooLarge,
    NotPrime,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it to a stable exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dsum
