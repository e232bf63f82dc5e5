#pragma once

#include <stdexcept>
#include <string>

namespace freeconv {

enum class Errc {
  DegreeExceedsAmbient,
  ZeroPolynomial,
  DegreeMismatch,
  DegreeDeficient,
  DegreeConditionViolated,
  DegreeZero,
  EndpointIsRoot,
  NotRealRooted,
  NonpositiveOmega,
  LengthMismatch,
  CrossingPinch,
  IndexOutOfRange,
  UnsupportedSize,
  SingleDistinctRoot,
  MuOutOfRange,
  IrrationalRoot,
  GammaMismatch,
  NotMultiaffine,
  StabilityNotCertified,
  PoleAtPoint,
  PreconditionNotCertified,
  UnknownStatement,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DegreeExceedsAmbient: return "DegreeExceedsAmbient";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DegreeDeficient: return "DegreeDeficient";
    case Errc::DegreeConditionViolated: return "DegreeConditionViolated";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::EndpointIsRoot: return "EndpointIsRoot";
    case Errc::NotRealRooted: return "NotRealRooted";
    case Errc::NonpositiveOmega: return "NonpositiveOmega";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CrossingPinch: return "CrossingPinch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::SingleDistinctRoot: return "SingleDistinctRoot";
    case Errc::MuOutOfRange: return "MuOutOfRange";
    case Errc::IrrationalRoot: return "IrrationalRoot";
    case Errc::GammaMismatch: return "GammaMismatch";
    case Errc::NotMultiaffine: return "NotMultiaffine";
    case Errc::StabilityNotCertified: return "StabilityNotCertified";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::PreconditionNotCertified: return "PreconditionNotCertified";
    case Errc::UnknownStatement: return "UnknownStatement";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace freeconv
