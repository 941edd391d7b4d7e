#pragma once

#include <stdexcept>
#include <string>

namespace spherahall {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLabel : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A rational function in v that is not a function of q = v^2.
class OddPowerResidue : public Error {
 public:
  using Error::Error;
};

/// The requested enumeration exceeds the configured ceiling.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

/// A hom-space dimension moved when the polynomial truncation was raised.
class TruncationUnstable : public Error {
 public:
  using Error::Error;
};

/// A semifree module whose homology has a free (infinite) part.
class InfiniteHomology : public Error {
 public:
  using Error::Error;
};

class NonTerminating : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A generator symbol outside the family an operation accepts.
class WrongFamily : public Error {
 public:
  using Error::Error;
};

/// Internal invariant violated; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spherahall
