#pragma once

#include <stdexcept>
#include <string>

namespace vlcsec {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// Transmitter and receiver share a position.
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

// No feasible LED assignment exists, or a given assignment violates the
// reachability / one-to-one constraints.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

class EnumerationTooLargeError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

inline void check_parameter(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameterError(what);
}

} // namespace vlcsec
