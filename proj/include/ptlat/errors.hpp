// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ptlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed lattice specification, config document or argument.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Expression or config syntax error with a 1-based source position.
class ParseError : public InvalidSpec {
 public:
  ParseError(const std::string& what, int line, int column)
      : InvalidSpec(what + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")"),
        message_(what),
        line_(line),
        column_(column) {}

  /// The message without the position suffix.
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// Parameter outside the validity range of a model family.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bracket endpoints do not straddle the feature being refined.
class InvalidBracket : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver or root finder failed to converge.
class SolverError : public NumericalError {
 public:
  SolverError(const std::string& what, int iterations)
      : NumericalError(what + " after " + std::to_string(iterations) + " iterations"),
        iterations_(iterations) {}

  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

/// Spectrum too close to degenerate for the requested operation.
class DegeneracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// No positive-definite metric exists (broken PT phase).
class NoMetricError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotFoundError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class TrackingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Two criteria that must agree did not.
class ConsistencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace ptlat
