#ifndef ARRMONO_ERRORS_HPP
#define ARRMONO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arrmono {

/// A prime that cannot be used for the requested reduction (it divides a
/// denominator). Callers are expected to pick another prime.
struct BadPrime : std::runtime_error {
    explicit BadPrime(const std::string& what) : std::runtime_error(what) {}
};

/// Exact polynomial division failed. Carries a description of the first
/// obstructed term; inside a divisibility certificate this signals a
/// refuted claim rather than a bug.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

/// A construction-time identity check failed (e.g. s4 != 9*F8^2).
struct IdentityFailed : std::runtime_error {
    explicit IdentityFailed(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arrmono

#endif
