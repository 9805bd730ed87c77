#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxsurf {

using cplx = std::complex<double>;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected)
      : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Division by zero, log of zero, or a negative power of zero during evaluation.
class EvalError : public Error {
 public:
  EvalError(std::string what, std::string node)
      : Error(what + " in `" + node + "`"), node_(std::move(node)) {}

  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

/// A point or path outside the declared domain, or too close to a puncture.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature hit its subdivision budget before meeting the tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(double estimate, double tolerance)
      : Error("quadrature did not converge: error estimate " + std::to_string(estimate) +
              " exceeds tolerance " + std::to_string(tolerance)),
        estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// |g| = 1 where a nondegenerate metric is required.
class DegenerateMetricError : public Error {
 public:
  using Error::Error;
};

/// Failure of an extension hypothesis or of the reflection construction.
class ContactError : public Error {
 public:
  enum class Kind {
    OrthogonalContact,
    HypothesisViolation,
    GeometryMismatch,
    SingularReconstruction,
    InsufficientSamples,
  };

  ContactError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Invalid configuration file contents. `field` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace maxsurf
