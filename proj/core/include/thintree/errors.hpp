#pragma once

#include <stdexcept>
#include <string>

namespace thintree {

/// Bad user input: malformed graph file, out-of-range parameter, unusable eta.
/// CLI exit code 2.
struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// An instance exceeds a hard enumeration budget (we refuse rather than guess).
/// CLI exit code 2.
struct BudgetError : ParameterError {
    explicit BudgetError(const std::string& what) : ParameterError(what) {}
};

/// A checked property of a produced object failed (cover misses an edge, tree
/// crosses too often, polygon rejected).  CLI exit code 1.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant that should hold by construction was violated; always
/// a bug in this library, never the caller's fault.  CLI exit code 3.
struct IntegrityError : std::logic_error {
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace thintree
