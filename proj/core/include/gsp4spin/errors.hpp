#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsp4 {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid declarations, frozen-context violations, or values from
/// different declaration contexts mixed in one operation.
class ContextError : public Error {
public:
    using Error::Error;
};

/// Operation applied outside its mathematical domain (Satake value of a
/// ramified character, quotient by a non-divisor, specialization with
/// unbound units or q <= 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested Bessel model does not exist; the query is well-formed
/// but mathematically empty.
class NoBesselModel : public Error {
public:
    using Error::Error;
};

/// A declared datum (Waldspurger flag, dihedral parameter, central
/// character of an opaque cuspidal) is required but was not provided.
class UndeclaredDatum : public Error {
public:
    using Error::Error;
};

/// Syntax error in the text notation, with a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace gsp4
