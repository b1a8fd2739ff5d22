#include "ltic/errors.hpp"

namespace ltic {

namespace {

std::string parse_message(std::size_t position, const std::string& expected,
                          const std::string& found) {
  return "parse error at offset " + std::to_string(position) + ": expected " + expected +
         ", found " + found;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : Error(parse_message(position, expected, found)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

const char* to_string(AnalysisErrc code) {
  switch (code) {
    case AnalysisErrc::NotZeroOrder: return "NotZeroOrder";
    case AnalysisErrc::SingularUnroll: return "SingularUnroll";
    case AnalysisErrc::NotLTI: return "NotLTI";
    case AnalysisErrc::NotAffine: return "NotAffine";
    case AnalysisErrc::DegenerateEquation: return "DegenerateEquation";
    case AnalysisErrc::WitnessSearchFailed: return "WitnessSearchFailed";
  }
  return "?";
}

AnalysisError::AnalysisError(AnalysisErrc code, const std::string& what)
    : Error(std::string(to_string(code)) + ": " + what), code_(code) {}

const char* to_string(NumericErrc code) {
  switch (code) {
    case NumericErrc::MissingBinding: return "MissingBinding";
    case NumericErrc::UnknownParameter: return "UnknownParameter";
    case NumericErrc::SingularDenominator: return "SingularDenominator";
    case NumericErrc::ImproperSystem: return "ImproperSystem";
    case NumericErrc::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
    case NumericErrc::NumericalBlowup: return "NumericalBlowup";
    case NumericErrc::ZeroCoefficientA: return "ZeroCoefficientA";
    case NumericErrc::QuietPrefixTooShort: return "QuietPrefixTooShort";
    case NumericErrc::DeltaNotOnGrid: return "DeltaNotOnGrid";
    case NumericErrc::InvalidGrid: return "InvalidGrid";
    case NumericErrc::InvalidSignal: return "InvalidSignal";
    case NumericErrc::InvalidBinding: return "InvalidBinding";
    case NumericErrc::Unsupported: return "Unsupported";
  }
  return "?";
}

NumericError::NumericError(NumericErrc code, const std::string& what)
    : Error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ltic
