#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

// Each error family maps to its own CLI exit code (see tools/commands.cpp).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed structures: mismatched leaf counts, width chains that do not line up.
struct StructuralError : DomainError {
    using DomainError::DomainError;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace thompson
