#include "motivic/stack_class.hpp"

#include <algorithm>

#include "motivic/error.hpp"

namespace motivic
{

SpecialRegistry::SpecialRegistry(GroupPtr group) : _group(std::move(group)) {}

SpecialEntry const &SpecialRegistry::add(SpecialEntry entry)
{
  if (!entry.polynomial.group()->same_as(*_group))
    throw Error(Errc::MixedContexts, "special class '" + entry.name + "' lives over another group");
  if (!entry.polynomial.is_monic() || entry.polynomial.degree() < 1)
    throw Error(Errc::NotSpecial, "'" + entry.name + "' is not monic of positive degree in L");
  if (entry.kind == SpecialKind::QuasiSplit && !entry.certificate)
    throw Error(Errc::NotSpecial, "'" + entry.name + "' has no quasi-split certificate");
  if (entry.kind == SpecialKind::Lefschetz && entry.polynomial != ArtinPolynomial::lefschetz(_group))
    throw Error(Errc::NotSpecial, "'" + entry.name + "' is not the Lefschetz class");
  auto it = _entries.find(entry.name);
  if (it != _entries.end()) {
    if (it->second.polynomial != entry.polynomial)
      throw Error(Errc::InvalidInput, "conflicting redefinition of special class '" + entry.name + "'");
    return it->second;
  }
  auto name = entry.name;
  return _entries.emplace(name, std::move(entry)).first->second;
}

SpecialEntry const &SpecialRegistry::get(std::string const &name) const
{
  auto it = _entries.find(name);
  if (it == _entries.end())
    throw Error(Errc::NotSpecial, "'" + name + "' is not a registered special class");
  return it->second;
}

bool SpecialRegistry::contains(SpecialEntry const &entry) const
{
  auto it = _entries.find(entry.name);
  return it != _entries.end() && it->second.polynomial == entry.polynomial;
}

std::vector<std::string> SpecialRegistry::names() const
{
  std::vector<std::string> out;
  for (auto const &[n, e] : _entries)
    out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------

StackClass::StackClass(ArtinPolynomial p) : _poly(std::move(p)) {}

StackClass StackClass::from_polynomial(ArtinPolynomial p)
{
  return StackClass(std::move(p));
}

StackClass StackClass::from_special(SpecialEntry const &e)
{
  StackClass s(ArtinPolynomial::integer(e.polynomial.group(), 1));
  s._num.push_back(e);
  return s;
}

StackClass StackClass::one(GroupPtr group)
{
  return StackClass(ArtinPolynomial::integer(std::move(group), 1));
}

void StackClass::normalize()
{
  auto by_name = [](SpecialEntry const &a, SpecialEntry const &b) { return a.name < b.name; };
  std::sort(_num.begin(), _num.end(), by_name);
  std::sort(_den.begin(), _den.end(), by_name);
  std::vector<SpecialEntry> num, den;
  std::size_t i = 0, j = 0;
  while (i < _num.size() || j < _den.size()) {
    if (j == _den.size() || (i < _num.size() && _num[i].name < _den[j].name))
      num.push_back(_num[i++]);
    else if (i == _num.size() || _den[j].name < _num[i].name)
      den.push_back(_den[j++]);
    else {
      ++i;
      ++j;
    }
  }
  _num = std::move(num);
  _den = std::move(den);
}

ArtinPolynomial StackClass::numerator_polynomial() const
{
  ArtinPolynomial p = _poly;
  for (auto const &e : _num)
    p = p * e.polynomial;
  return p;
}

ArtinPolynomial StackClass::denominator_polynomial() const
{
  ArtinPolynomial p = ArtinPolynomial::integer(group(), 1);
  for (auto const &e : _den)
    p = p * e.polynomial;
  return p;
}

StackClass StackClass::inverse() const
{
  auto one = ArtinPolynomial::integer(group(), 1);
  if (_poly != one && _poly != -one)
    throw Error(Errc::UnsoundDenominator,
                "cannot invert: polynomial factor " + _poly.to_string() + " is not a registered special class");
  StackClass s(_poly);
  s._num = _den;
  s._den = _num;
  return s;
}

StackClass StackClass::over(SpecialEntry const &e) const
{
  StackClass s = *this;
  s._den.push_back(e);
  s.normalize();
  return s;
}

std::optional<ArtinPolynomial> StackClass::as_polynomial() const
{
  ArtinPolynomial p = numerator_polynomial();
  for (auto const &e : _den) {
    auto r = divide_monic(p, e.polynomial);
    if (!r.remainder.is_zero_polynomial())
      return std::nullopt;
    p = r.quotient;
  }
  return p;
}

StackClass operator*(StackClass const &a, StackClass const &b)
{
  StackClass s(a._poly * b._poly);
  s._num = a._num;
  s._num.insert(s._num.end(), b._num.begin(), b._num.end());
  s._den = a._den;
  s._den.insert(s._den.end(), b._den.begin(), b._den.end());
  s.normalize();
  return s;
}

std::string StackClass::format(GaloisContext const &ctx) const
{
  std::string num = numerator_polynomial().format(ctx);
  if (_den.empty())
    return num;
  if (numerator_polynomial().coefficients().size() > 1 ||
      (!numerator_polynomial().is_zero_polynomial() && numerator_polynomial().coefficient(0).terms().size() > 1))
    num = "(" + num + ")";
  std::string den;
  for (auto const &e : _den) {
    if (!den.empty())
      den += " * ";
    den += "(" + e.polynomial.format(ctx) + ")";
  }
  return num + " / (" + den + ")";
}

EqualityVerdict stack_equal(StackClass const &x, StackClass const &y, GaloisContext const &ctx,
                            SpecialRegistry const &registry)
{
  for (auto const *c : {&x, &y}) {
    for (auto const &e : c->denominator())
      if (!registry.contains(e))
        throw Error(Errc::UnsoundDenominator, "denominator '" + e.name + "' is not a registered special class");
    for (auto const &e : c->numerator_factors())
      if (!registry.contains(e))
        throw Error(Errc::UnsoundDenominator, "factor '" + e.name + "' is not a registered special class");
  }
  ArtinPolynomial diff =
    x.numerator_polynomial() * y.denominator_polynomial() - y.numerator_polynomial() * x.denominator_polynomial();
  if (!diff.is_zero_polynomial()) {
    auto m = marks(diff.coefficient(static_cast<std::size_t>(diff.degree())));
    auto first = std::find_if(m.values.begin(), m.values.end(), [](std::int64_t v) { return v != 0; });
    if (first != m.values.end() && *first < 0)
      diff = -diff;
  }
  ZeroVerdict z = is_zero(diff, ctx);
  return {z.zero, z.scope, diff, z};
}

} // namespace motivic
