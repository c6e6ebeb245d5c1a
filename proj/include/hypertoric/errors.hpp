#pragma once

#include <stdexcept>
#include <string>

namespace hypertoric {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed datum shape (sizes, ranks) or malformed text input.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A datum file could not be read: bad JSON, a missing or mistyped field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A column of B is zero or has entry gcd != 1.
class NonPrimitiveNormal : public Error {
public:
    using Error::Error;
};

/// Vertex enumeration was requested on an arrangement that is not simple.
class NotSimple : public Error {
public:
    using Error::Error;
};

/// A presentation was requested for a datum that is not split and smooth.
class NotSmooth : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class NotHomogeneous : public Error {
public:
    using Error::Error;
};

/// The chosen u-vectors do not generate the character lattice.
class DegenerateUSet : public Error {
public:
    using Error::Error;
};

/// A Groebner computation exceeded its configured caps. This signals an
/// instance beyond the configured scale, not a mathematical failure.
class ResourceBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Rejection sampling ran out of attempts.
class GiveUp : public Error {
public:
    using Error::Error;
};

}  // namespace hypertoric
