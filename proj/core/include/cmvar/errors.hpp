#pragma once

#include <stdexcept>
#include <string>

namespace cmvar {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a domain type invariant does not hold.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation precondition does not hold for otherwise well-formed input.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotRealizable : public DomainError {
 public:
  using DomainError::DomainError;
};

class RankExceedsTarget : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedFamily : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotLaman : public DomainError {
 public:
  using DomainError::DomainError;
};

class AllZeroSigma : public DomainError {
 public:
  using DomainError::DomainError;
};

class SelfAdjointnessViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical breakdown or a broken internal assertion. Never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

class IdentityViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

class NonIntegerProduct : public InternalError {
 public:
  using InternalError::InternalError;
};

class OddRankAnomaly : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace cmvar
