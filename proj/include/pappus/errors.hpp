#pragma once

#include <stdexcept>
#include <string>

namespace pappus {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument outside the mathematical domain checks (e.g. a non-prime modulus).
class ArgumentError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

/// Proportional inputs to join/meet, degenerate cross-ratio quadruples, etc.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// A rational function evaluated at one of its poles (j at 0 or 1, alpha at 2, ...).
class PoleError : public Error {
public:
    using Error::Error;
};

/// A Pappus configuration violating one of the four structure axioms.
class StructureError : public Error {
public:
    using Error::Error;
};

/// r^2 - r + 1 = 0 and s^2 - s + 1 = 0: one of the Steiner points is undefined.
class SteinerDegenerate : public Error {
public:
    using Error::Error;
};

/// The Pappus-Steiner map evaluated on the diagonal x = y.
class UndefinedMap : public Error {
public:
    using Error::Error;
};

class DegenerateConic : public Error {
public:
    using Error::Error;
};

/// A computational check that should hold identically did not.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

} // namespace pappus
