#pragma once

#include <stdexcept>
#include <string>

namespace covrad {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// exit codes: UsageError -> 2, DomainError -> 3, ResourceError -> 4.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments or violated call contracts (bad dimensions, options).
class UsageError : public Error {
public:
    using Error::Error;
};

// Mathematically invalid input (unbounded polytope, repeated velocities, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A configurable safety cap was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Broken internal invariant; indicates a bug or a violated precondition that
// was only detectable post hoc.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace covrad
