#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested field order is not a supported prime or power of two.
struct UnsupportedOrderError : Error {
    explicit UnsupportedOrderError(unsigned q)
        : Error("unsupported field order " + std::to_string(q) +
                " (supported: primes <= 257 and 4, 8, 16, 32, 64, 128, 256)"),
          order(q) {}
    unsigned order;
};

/// An enumeration would exceed its size guard.
struct GuardError : Error {
    using Error::Error;
};

/// Malformed input file; `line` is 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

/// Operation is undefined for the given parameters (e.g. expansion constants at r=1).
struct DomainError : Error {
    using Error::Error;
};

/// A documented precondition does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// Two routes that must agree disagreed. Any throw is a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace lrc
