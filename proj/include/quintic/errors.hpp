#pragma once

#include <stdexcept>
#include <string>

namespace quintic {

enum class Errc {
  NotOddPrime,
  ZeroArgument,
  EmptyList,
  DivisionByZeroPoly,
  PoleAtPoint,
  NotQuadratic,
  PointNotOnHypersurface,
  ZeroCoefficient,
  NotNormalized,
  BaseNotOnConic,
  SingularCurve,
  PointNotOnCurve,
  DegenerateSpecialization,
  WrongFamily,
  DegenerateParameters,
  NotSolvable,
  NoBasePointFound,
  MapPole,
  SingularCubic,
  PointNotOnCubic,
  DegenerateConic,
  SeedNotOnConic,
  InvalidInput,
  ParseError,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NotOddPrime: return "NotOddPrime";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::EmptyList: return "EmptyList";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::NotQuadratic: return "NotQuadratic";
    case Errc::PointNotOnHypersurface: return "PointNotOnHypersurface";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::BaseNotOnConic: return "BaseNotOnConic";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::DegenerateSpecialization: return "DegenerateSpecialization";
    case Errc::WrongFamily: return "WrongFamily";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::NotSolvable: return "NotSolvable";
    case Errc::NoBasePointFound: return "NoBasePointFound";
    case Errc::MapPole: return "MapPole";
    case Errc::SingularCubic: return "SingularCubic";
    case Errc::PointNotOnCubic: return "PointNotOnCubic";
    case Errc::DegenerateConic: return "DegenerateConic";
    case Errc::SeedNotOnConic: return "SeedNotOnConic";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace quintic
