#pragma once

#include <stdexcept>
#include <string>

namespace sandlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (unsorted, unstable, wrong sizes).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Arguments outside the supported domain (n < 1, d < 0, T_I with d = 0).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace sandlab
