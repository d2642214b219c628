#pragma once

#include <stdexcept>
#include <string>

namespace rbd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in lattices of different rank.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation (e.g. p < 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configuration has the wrong number of classes for its p.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold. The message names it.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Internal arithmetic invariant broken (e.g. non-integral d-invariant).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A search would exceed its configured size cap.
class SearchSizeError : public Error {
 public:
  SearchSizeError(const std::string& what, long double estimate)
      : Error(what), estimate_(estimate) {}
  long double estimate() const noexcept { return estimate_; }

 private:
  long double estimate_;
};

}  // namespace rbd
