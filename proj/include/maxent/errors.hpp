#pragma once
#include <stdexcept>
#include <string>

namespace maxent {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A parameter is non-finite or violates a type invariant.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A value lies outside the open interval where a solution exists.
class OutOfRange : public Error {
public:
  using Error::Error;
};

/// No admissible point satisfies the constraints.
class Infeasible : public Error {
public:
  using Error::Error;
};

/// An iterative solver exhausted its budget. Distinct from infeasibility.
class ConvergenceFailure : public Error {
public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// A configuration document is malformed or violates its schema.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace maxent
