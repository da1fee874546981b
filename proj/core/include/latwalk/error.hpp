#pragma once

#include <stdexcept>
#include <string>

namespace latwalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A configured budget (vertex count, panel evaluations) was exhausted.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// A numerical routine failed to meet its tolerance.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a special function.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace latwalk
