#pragma once

#include <stdexcept>
#include <string>

namespace superaff {

/// Invalid family parameters, or a realization that failed its own invariant checks.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (isotropic reflection, dimension mismatch, unknown root).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// u does not define a principal boundary level for the algebra.
struct RejectedLevelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Something that should be impossible happened; signals a bug in the realization or algorithms.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace superaff
