#pragma once

#include <stdexcept>
#include <string>

namespace radwave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (e.g. |z| > 1, t >= r).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Polynomial degree above the supported cap.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// The constant search could not find an admissible value.
class SearchFailure : public Error {
public:
    using Error::Error;
};

/// A documented precondition on parameters was violated (e.g. kappa >= kappa0).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Invalid solver or run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The characteristic grid is too coarse for a Duhamel application.
class GridTooCoarse : public Error {
public:
    using Error::Error;
};

/// A self-check inside the library failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace radwave
