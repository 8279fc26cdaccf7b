#pragma once

#include <stdexcept>
#include <string>

namespace simplicial {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input (edge lists, annotation files, arguments).
class InputError : public Error {
public:
    using Error::Error;
};

/// A level was requested that the complex was not built deep enough to answer,
/// e.g. upper adjacency at level k of a complex materialized only up to k.
class InsufficientDepthError : public Error {
public:
    using Error::Error;
};

/// Iterative numerics failed, or a spectral quantity does not exist for the input.
class NumericError : public Error {
public:
    using Error::Error;
};

/// A problem is too large for the requested (dense) method.
class CapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace simplicial
