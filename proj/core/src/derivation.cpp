#include "motivic/derivation.hpp"

#include <algorithm>
#include <set>

#include "json_io.hpp"
#include "motivic/error.hpp"

namespace motivic
{

std::vector<Axiom> const &axiom_catalogue()
{
  static std::vector<Axiom> const list = {
    {axioms::coefficient_independence,
     "If a monic multiple of a polynomial in L with Artin-class coefficients vanishes in K0(Var_F), every "
     "coefficient of the polynomial vanishes."},
    {axioms::field_independence,
     "The classes of the spectra of pairwise non-isomorphic finite field extensions of F are linearly "
     "independent in K0(Var_F), so B(Gal(K/F)) embeds."},
    {axioms::rank_two_rational, "Every two-dimensional algebraic torus over F is rational."},
    {axioms::pointed_conic, "A form of the projective line that has an F-rational point is isomorphic to P^1."},
    {axioms::quadric_rulings,
     "Automorphisms of P^1 x P^1 permute its two rulings, so a form of P^1 x P^1 whose twisting cocycle "
     "swaps the factors through a quadratic extension E is the Weil restriction of a form of P^1 over E."},
  };
  return list;
}

Axiom const &axiom(std::string const &id)
{
  for (auto const &a : axiom_catalogue())
    if (a.id == id)
      return a;
  throw Error(Errc::InvalidInput, "unknown axiom '" + id + "'");
}

bool Trace::knows(std::string const &name) const
{
  for (auto const &[n, v] : _givens)
    if (n == name)
      return true;
  for (auto const &s : _steps)
    if (s.output == name)
      return true;
  return false;
}

void Trace::given(std::string name, std::string value)
{
  for (auto const &[n, v] : _givens)
    if (n == name) {
      if (v != value)
        throw Error(Errc::InvalidInput, "input '" + name + "' declared twice with different values");
      return;
    }
  _givens.emplace_back(std::move(name), std::move(value));
}

void Trace::add(DerivationStep step)
{
  for (auto const &p : step.premises)
    if (!knows(p))
      throw Error(Errc::InvalidInput, "step '" + step.rule + "' uses unknown premise '" + p + "'");
  if (step.justification == Justification::Verified) {
    if (step.side_conditions.empty())
      throw Error(Errc::InvalidInput, "verified step '" + step.rule + "' has no side condition");
    for (auto const &c : step.side_conditions)
      if (!c.pass)
        throw Error(Errc::InvalidInput, "verified step '" + step.rule + "' has failing check '" + c.check + "'");
    if (!step.axioms.empty())
      throw Error(Errc::InvalidInput, "verified step '" + step.rule + "' cites axioms");
  }
  else {
    if (step.axioms.empty())
      throw Error(Errc::InvalidInput, "axiom step '" + step.rule + "' cites no axiom");
    for (auto const &a : step.axioms)
      axiom(a);
  }
  for (auto const &s : _steps)
    if (s.output == step.output) {
      if (s.value != step.value)
        throw Error(Errc::InvalidInput, "'" + step.output + "' derived twice with different values");
      return;
    }
  _steps.push_back(std::move(step));
}

void Trace::append(Trace const &other)
{
  for (auto const &[n, v] : other._givens)
    if (!knows(n))
      _givens.emplace_back(n, v);
  for (auto const &s : other._steps)
    add(s);
}

std::vector<std::string> Trace::axioms() const
{
  std::set<std::string> ids;
  for (auto const &s : _steps)
    ids.insert(s.axioms.begin(), s.axioms.end());
  return {ids.begin(), ids.end()};
}

std::string Trace::to_json() const
{
  return detail::trace_to_json(*this).dump(2);
}

namespace detail
{

nlohmann::json trace_to_json(Trace const &t)
{
  auto out = nlohmann::json::array();
  for (auto const &s : t.steps()) {
    auto checks = nlohmann::json::array();
    for (auto const &c : s.side_conditions)
      checks.push_back({{"check", c.check}, {"verdict", c.pass ? "pass" : "fail"}});
    out.push_back({{"rule", s.rule},
                   {"premises", s.premises},
                   {"side_conditions", checks},
                   {"output", s.output},
                   {"value", s.value},
                   {"justification", s.justification == Justification::Verified ? "VERIFIED" : "AXIOM"},
                   {"axioms", s.axioms}});
  }
  return out;
}

} // namespace detail

} // namespace motivic
