#pragma once

#include <stdexcept>
#include <string>

namespace orbitatlas {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (size mismatches, bad specs, ...).
struct InputError : Error {
    using Error::Error;
};

/// Request exceeds a documented size bound.
struct CapacityError : InputError {
    using InputError::InputError;
};

/// A rank table (or similar invariant) does not correspond to any involution.
struct ReconstructionError : Error {
    using Error::Error;
};

/// Invariant violation that signals a bug rather than bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace orbitatlas
