#pragma once

#include <stdexcept>
#include <string>

namespace spinfw
{

//! Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Argument outside the mathematical domain (e.g. |beta| >= 1).
class DomainError : public Error
{
  public:
    using Error::Error;
};

//! A documented precondition (constraint, oddness, ...) was violated.
class PreconditionError : public Error
{
  public:
    using Error::Error;
};

//! Invalid physical or lattice configuration.
class ConfigurationError : public Error
{
  public:
    using Error::Error;
};

//! Operator series cannot be truncated within the requested tail bound.
class SeriesTruncationError : public Error
{
  public:
    using Error::Error;
};

//! A diagnostic could not be computed from the supplied data.
class DiagnosticError : public Error
{
  public:
    using Error::Error;
};

//! Malformed symbolic input.
class InputError : public Error
{
  public:
    using Error::Error;
};

//! Signals numerical corruption; never expected in correct use.
class InternalError : public Error
{
  public:
    using Error::Error;
};

[[noreturn]] void throw_domain(std::string const& what);
[[noreturn]] void throw_precondition(std::string const& what);

}  // namespace spinfw
