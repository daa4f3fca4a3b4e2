#include "motivic/error.hpp"

namespace motivic
{

std::string_view errc_name(Errc code) noexcept
{
  switch (code) {
  case Errc::InvalidAction: return "InvalidAction";
  case Errc::MixedGroups: return "MixedGroups";
  case Errc::UnknownSubgroup: return "UnknownSubgroup";
  case Errc::Incomposable: return "Incomposable";
  case Errc::NotEquivariant: return "NotEquivariant";
  case Errc::InvalidModulus: return "InvalidModulus";
  case Errc::InvalidCertificate: return "InvalidCertificate";
  case Errc::MixedContexts: return "MixedContexts";
  case Errc::NotDivisible: return "NotDivisible";
  case Errc::UnsoundDenominator: return "UnsoundDenominator";
  case Errc::NotQuadratic: return "NotQuadratic";
  case Errc::BadPayload: return "BadPayload";
  case Errc::RuleScopeError: return "RuleScopeError";
  case Errc::NotSpecial: return "NotSpecial";
  case Errc::NotQuasiSplit: return "NotQuasiSplit";
  case Errc::BadSequence: return "BadSequence";
  case Errc::UnsupportedParameter: return "UnsupportedParameter";
  case Errc::InvalidInput: return "InvalidInput";
  case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

} // namespace motivic
