#ifndef LIEALG_ERRORS_HPP
#define LIEALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liealg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Matrix or vector dimensions do not fit the operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An index or parameter lies outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Linear solving requested over a residue ring that is not a field.
class UnsupportedField : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation is violated by its input.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotAnIdeal : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A constructed object failed its own postcondition battery.
class PostconditionFailure : public Error {
public:
    using Error::Error;
};

/// Two independent computations that must agree did not.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace liealg

#endif // LIEALG_ERRORS_HPP
