#ifndef MOTIVIC_ERROR_HPP
#define MOTIVIC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace motivic
{

enum class Errc
{
  InvalidAction,
  MixedGroups,
  UnknownSubgroup,
  Incomposable,
  NotEquivariant,
  InvalidModulus,
  InvalidCertificate,
  MixedContexts,
  NotDivisible,
  UnsoundDenominator,
  NotQuadratic,
  BadPayload,
  RuleScopeError,
  NotSpecial,
  NotQuasiSplit,
  BadSequence,
  UnsupportedParameter,
  InvalidInput,
  Overflow,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error
{
public:
  Error(Errc code, std::string const &what)
  : std::runtime_error(std::string(errc_name(code)) + ": " + what),
    _code(code)
  {}

  Errc code() const noexcept
  { return _code; }

private:
  Errc _code;
};

} // namespace motivic

#endif // MOTIVIC_ERROR_HPP
