// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mtf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the supported domain (negative mode, unsupported complex argument, ...).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// A special-function evaluation lost all precision.
class AccuracyError : public Error
{
public:
  using Error::Error;
};

/// Bad name, tag or option supplied by a caller.
class UsageError : public Error
{
public:
  using Error::Error;
};

/// Matrix is numerically singular.
class SingularityError : public Error
{
public:
  using Error::Error;
};

/// An iterative dense kernel failed to converge.
class ConvergenceError : public Error
{
public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error
{
public:
  using Error::Error;
};

}  // namespace mtf
