#pragma once

#include <stdexcept>
#include <string>

namespace modlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Matrix or vector dimensions that cannot be combined.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Elements that belong to different lattices were combined.
class LatticeMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedBackend : public Error {
 public:
  using Error::Error;
};

class SetupFailure : public Error {
 public:
  using Error::Error;
};

class H1Failure : public Error {
 public:
  using Error::Error;
};

class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// The master key has already issued its maximum number of private keys.
class IssuanceExhausted : public Error {
 public:
  using Error::Error;
};

class EncryptionFailure : public Error {
 public:
  using Error::Error;
};

class MessageLengthError : public Error {
 public:
  using Error::Error;
};

/// Artifacts produced under different public parameters were combined.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its budget. `count()` is the exact
/// number of elements that would have been visited, in decimal.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string count)
      : Error(what), count_(std::move(count)) {}
  const std::string& count() const noexcept { return count_; }

 private:
  std::string count_;
};

/// An adversary broke the rules of the security game.
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized artifact.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace modlat
