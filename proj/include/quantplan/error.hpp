#pragma once

#include <stdexcept>

namespace quantplan {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad range, non-finite value).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The inputs are individually valid but admit no feasible plan,
/// e.g. the ADC rate is below twice the base rate.
class Infeasible : public Error {
public:
    using Error::Error;
};

/// A numerical procedure could not produce a trustworthy value
/// (non-finite samples, root not bracketed).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace quantplan
