#ifndef CUBESQ_ERRORS_HPP
#define CUBESQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubesq {

// Base class for all domain errors raised by the library.  The CLI maps
// these to exit code 1; anything else escaping to main is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct ZeroForm : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct InhomogeneousInput : Error {
    using Error::Error;
};

struct NotAnEllipticFibration : Error {
    using Error::Error;
};

struct InvalidLattice : Error {
    using Error::Error;
};

}  // namespace cubesq

#endif
