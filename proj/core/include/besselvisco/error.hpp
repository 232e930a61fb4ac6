#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bvisco {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag, e.g. "domain" or "insufficient_zeros".
  virtual const char* kind() const noexcept { return "error"; }
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Evaluation requested at (or too close to) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "pole"; }
};

/// The result is not representable as a finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "overflow"; }
};

/// An iteration failed to reach its tolerance within the allowed budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "convergence"; }
};

/// A Dirichlet series needs more Bessel zeros than the supplied table holds.
class InsufficientZerosError : public Error {
 public:
  InsufficientZerosError(const std::string& what, std::size_t required)
      : Error(what), required_(required) {}
  const char* kind() const noexcept override { return "insufficient_zeros"; }
  /// Estimated zero count that satisfies the tail tolerance.
  std::size_t required_count() const noexcept { return required_; }

 private:
  std::size_t required_;
};

/// Series evaluation requested below SeriesPolicy::min_time.
class BelowMinTimeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "below_min_time"; }
};

/// A response was requested outside the span of the load history.
class ExtrapolationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "extrapolation"; }
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

}  // namespace bvisco
