#pragma once

#include <stdexcept>
#include <string>

namespace schurring {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An S-ring axiom failed during validation.
class ValidationError : public Error {
 public:
  enum class Kind { NotAPartition, ZeroClassNotSingleton, NotInverseClosed, NotClosedUnderProduct };

  ValidationError(Kind kind, const std::string& detail)
      : Error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::NotAPartition: return "NotAPartition";
      case Kind::ZeroClassNotSingleton: return "ZeroClassNotSingleton";
      case Kind::NotInverseClosed: return "NotInverseClosed";
      case Kind::NotClosedUnderProduct: return "NotClosedUnderProduct";
    }
    return "ValidationError";
  }

 private:
  Kind kind_;
};

class NotAnAGroup : public Error {
 public:
  using Error::Error;
};

class NotComplementary : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class IncompatibleSection : public Error {
 public:
  using Error::Error;
};

class SectionActionMismatch : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotNonSchurian : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace schurring
