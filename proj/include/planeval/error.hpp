#pragma once

#include <stdexcept>
#include <string>

namespace planeval {

enum class Errc {
  MixedRadicand,
  NegativeRadicand,
  DimensionMismatch,
  SyntaxError,
  IndexOutOfRange,
  RepeatedIndex,
  NumericalPrecondition,
  UnsupportedN,
  InvalidArgs,
  InvalidParameter,
  NonTermination,
  InvalidCluster,
  NonIntegral,
  ZeroPolynomial,
  TruncationCap,
  BadPrime,
  DegenerateConfig,
  DivisionByZero,
  ResourceLimit,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::MixedRadicand: return "MixedRadicand";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::RepeatedIndex: return "RepeatedIndex";
    case Errc::NumericalPrecondition: return "NumericalPrecondition";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::InvalidArgs: return "InvalidArgs";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::NonTermination: return "NonTermination";
    case Errc::InvalidCluster: return "InvalidCluster";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::TruncationCap: return "TruncationCap";
    case Errc::BadPrime: return "BadPrime";
    case Errc::DegenerateConfig: return "DegenerateConfig";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ResourceLimit: return "ResourceLimit";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& msg)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}

  Errc kind() const { return kind_; }
  const char* name() const { return errc_name(kind_); }

 private:
  Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace planeval
