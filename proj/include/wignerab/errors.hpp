#pragma once

#include <stdexcept>
#include <string>

namespace wignerab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied values was violated.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A sampled wavefunction or field does not decay at the grid edges.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// A result that must be real or non-negative is not: a sign or kernel bug.
class ConventionError : public Error {
public:
    using Error::Error;
};

/// Fringe extraction could not find what it needs in the curve.
class AnalysisError : public Error {
public:
    using Error::Error;
};

} // namespace wignerab
