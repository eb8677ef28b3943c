#pragma once

#include <stdexcept>
#include <string>

namespace qmedshield {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A chaotic iteration left the bounded regime (|value| > 1e6) or, for the
// quantum logistic map, accumulated imaginary drift beyond tolerance.
struct DivergenceError : Error {
    using Error::Error;
};

// Two operands (image/key matrix/planes) have incompatible shapes.
struct DimensionError : Error {
    using Error::Error;
};

// A measurement was requested on a state that is not a computational basis
// state, so the outcome would not be reproducible.
struct NondeterministicStateError : Error {
    using Error::Error;
};

// Key file is malformed or a field violates its invariant. `field` names the
// offending record when known.
struct KeyError : Error {
    std::string field;
    KeyError(std::string field_name, const std::string& what)
        : Error(what), field(std::move(field_name)) {}
};

struct IoError : Error {
    using Error::Error;
};

// Unsupported or corrupt image file contents.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace qmedshield
