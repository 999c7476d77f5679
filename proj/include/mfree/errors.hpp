#pragma once

#include <stdexcept>
#include <string>

namespace mfree {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed text, violated preconditions on user-supplied data.
class UserError : public Error {
 public:
  using Error::Error;
};

// A mathematical check failed. Signals an arithmetic or construction bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public UserError {
 public:
  using UserError::UserError;
};

class NotCentral : public UserError {
 public:
  using UserError::UserError;
};

class Duplicate : public UserError {
 public:
  using UserError::UserError;
};

class ZeroForm : public UserError {
 public:
  using UserError::UserError;
};

class DimensionMismatch : public UserError {
 public:
  using UserError::UserError;
};

class BadM : public UserError {
 public:
  using UserError::UserError;
};

class NotEssential : public UserError {
 public:
  using UserError::UserError;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class SaitoFailed : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class ZeroDet : public SaitoFailed {
 public:
  using SaitoFailed::SaitoFailed;
};

class NotPurePower : public SaitoFailed {
 public:
  using SaitoFailed::SaitoFailed;
};

class IdentityViolated : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class ZeroNormalizer : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class SolveFailed : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

}  // namespace mfree
