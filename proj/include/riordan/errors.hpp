#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Base type for every error this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Requested data lies beyond the certified truncation order.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Division by a series whose constant term is zero.
class SingularDivisionError : public Error {
public:
    using Error::Error;
};

// Composition with an inner series whose constant term is nonzero.
class CompositionError : public Error {
public:
    using Error::Error;
};

// Reversion of a series that does not vanish at 0 with nonzero linear term.
class ReversionError : public Error {
public:
    using Error::Error;
};

// Square root is supported only for series with constant term exactly 1.
class BranchError : public Error {
public:
    using Error::Error;
};

// Riordan arrays require both components to have constant term exactly 1.
class NormalizationError : public Error {
public:
    using Error::Error;
};

// Unknown catalog name or reference tag.
class LookupError : public Error {
public:
    using Error::Error;
};

// A mathematical identity that must hold was violated.
class IdentityError : public Error {
public:
    using Error::Error;
};

// Two independent computations of the same quantity disagreed: a kernel bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Invalid argument values at an API boundary (negative shift, zero trials, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace riordan
