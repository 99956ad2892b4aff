#pragma once

#include <stdexcept>
#include <string>

namespace pentachain {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an exact inverse (or a pivot) does not exist. `where` names
// the offending matrix or simplex when known.
struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& where)
        : Error("singular matrix: " + where) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

// Pachner / pillow move preconditions.
struct MoveError : Error {
    using Error::Error;
};

}  // namespace pentachain
