#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rieszweyl {

// Base of every error thrown by the library. Callers that only care about
// "something was invalid" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (Γ(x ≤ 0), ν < −1/2).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Root finder failed to bracket or to meet its residual check.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A generator was asked for a spectrum with no eigenvalue below its threshold.
class EmptySpectrumError : public Error {
 public:
  using Error::Error;
};

// Predicted or actual eigenvalue count exceeds the configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A spectrum, domain or argument violated a stated invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Evaluation point lies above the spectrum's completeness threshold.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class MissingVolumeError : public Error {
 public:
  using Error::Error;
};

// Index or transform argument past the end of the stored eigenvalues.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A bound was evaluated outside the parameter region where it is proved.
class ValidityError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rieszweyl
