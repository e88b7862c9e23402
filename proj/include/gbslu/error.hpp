#pragma once

#include <stdexcept>
#include <string>

namespace gbslu {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonInvertible : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class PowerOutOfRange : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// A GPM outside the sublattice a lattice-restricted map is defined on.
class NotInLattice : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class GuardFailed : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

class DimensionTooLarge : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace gbslu
