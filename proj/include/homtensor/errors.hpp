#pragma once

#include <stdexcept>
#include <string>

namespace homtensor {

/// Base class for all homtensor errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible dimensions or shapes between operands.
struct DimensionError : Error {
    using Error::Error;
};

/// A twist map required to be invertible is singular.
struct RegularityError : Error {
    using Error::Error;
};

/// A structural invariant of an input value does not hold
/// (e.g. a witness vector not fixed by the twist, a non-equivariant cochain).
struct InvariantViolation : Error {
    using Error::Error;
};

/// A documented precondition of an operation fails.
struct PreconditionError : Error {
    using Error::Error;
};

/// A requested cochain space exceeds the configured coefficient bound.
struct CapacityError : Error {
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

/// Malformed workspace file or unresolved reference.
struct ParseError : Error {
    using Error::Error;
};

} // namespace homtensor
