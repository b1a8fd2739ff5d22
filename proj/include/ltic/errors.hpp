#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time differentiation hit a nonlinear composition of a signal or of t.
class UnsupportedDifferentiation : public Error {
 public:
  using Error::Error;
};

/// A reciprocal of an expression that normalizes to zero.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

enum class AnalysisErrc {
  NotZeroOrder,
  SingularUnroll,
  NotLTI,
  NotAffine,
  DegenerateEquation,
  WitnessSearchFailed,
};

const char* to_string(AnalysisErrc code);

class AnalysisError : public Error {
 public:
  AnalysisError(AnalysisErrc code, const std::string& what);
  AnalysisErrc code() const { return code_; }

 private:
  AnalysisErrc code_;
};

enum class NumericErrc {
  MissingBinding,
  UnknownParameter,
  SingularDenominator,
  ImproperSystem,
  SingularLeadingCoefficient,
  NumericalBlowup,
  ZeroCoefficientA,
  QuietPrefixTooShort,
  DeltaNotOnGrid,
  InvalidGrid,
  InvalidSignal,
  InvalidBinding,
  Unsupported,
};

const char* to_string(NumericErrc code);

class NumericError : public Error {
 public:
  NumericError(NumericErrc code, const std::string& what);
  NumericErrc code() const { return code_; }

 private:
  NumericErrc code_;
};

}  // namespace ltic
