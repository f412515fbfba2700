#pragma once

#include <stdexcept>
#include <string>

namespace rc {

// Bad input: outside an operation's mathematical domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured size bound (sieve memory, 64-bit range).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An identity that must hold exactly did not.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rc
