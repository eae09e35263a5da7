#pragma once

#include <stdexcept>
#include <string>

namespace mlcech {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (zero function, pole on the
/// boundary, unsolvable distribution, ...).
class MathError : public Error {
public:
    using Error::Error;
};

/// Exact Laurent-window arithmetic produced a term outside the window.
class WindowOverflow : public MathError {
public:
    using MathError::MathError;
};

/// Cohomology dimensions changed between window M and M + step.
class StabilizationError : public MathError {
public:
    using MathError::MathError;
};

/// Input data violates a structural schema (malformed JSON, bad faces, ...).
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace mlcech
