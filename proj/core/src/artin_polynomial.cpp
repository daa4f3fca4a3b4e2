#include "motivic/artin_polynomial.hpp"

#include "motivic/checked.hpp"
#include "motivic/error.hpp"

namespace motivic
{

ArtinPolynomial::ArtinPolynomial(GroupPtr group) : _group(std::move(group)) {}

ArtinPolynomial::ArtinPolynomial(GroupPtr group, std::vector<BurnsideElement> coefficients)
: _group(std::move(group)), _c(std::move(coefficients))
{
  for (auto const &c : _c)
    if (!c.group()->same_as(*_group))
      throw Error(Errc::MixedContexts, "coefficient lives over a different group");
  trim();
}

ArtinPolynomial ArtinPolynomial::constant(BurnsideElement c)
{
  GroupPtr g = c.group();
  return ArtinPolynomial(g, {std::move(c)});
}

ArtinPolynomial ArtinPolynomial::integer(GroupPtr group, std::int64_t n)
{
  return constant(BurnsideElement::integer(std::move(group), n));
}

ArtinPolynomial ArtinPolynomial::monomial(BurnsideElement c, std::size_t k)
{
  GroupPtr g = c.group();
  std::vector<BurnsideElement> coeffs(k, BurnsideElement(g));
  coeffs.push_back(std::move(c));
  return ArtinPolynomial(g, std::move(coeffs));
}

ArtinPolynomial ArtinPolynomial::lefschetz(GroupPtr group, std::size_t k)
{
  return monomial(BurnsideElement::integer(group, 1), k);
}

BurnsideElement ArtinPolynomial::coefficient(std::size_t k) const
{
  return k < _c.size() ? _c[k] : BurnsideElement(_group);
}

bool ArtinPolynomial::is_monic() const
{
  return !_c.empty() && _c.back() == BurnsideElement::integer(_group, 1);
}

void ArtinPolynomial::trim()
{
  while (!_c.empty() && _c.back().is_zero())
    _c.pop_back();
}

void ArtinPolynomial::require_same(ArtinPolynomial const &o) const
{
  if (!_group->same_as(*o._group))
    throw Error(Errc::MixedContexts, "polynomials over different Galois groups");
}

ArtinPolynomial &ArtinPolynomial::operator+=(ArtinPolynomial const &o)
{
  require_same(o);
  if (_c.size() < o._c.size())
    _c.resize(o._c.size(), BurnsideElement(_group));
  for (std::size_t k = 0; k < o._c.size(); ++k)
    _c[k] += o._c[k];
  trim();
  return *this;
}

ArtinPolynomial &ArtinPolynomial::operator-=(ArtinPolynomial const &o)
{
  require_same(o);
  if (_c.size() < o._c.size())
    _c.resize(o._c.size(), BurnsideElement(_group));
  for (std::size_t k = 0; k < o._c.size(); ++k)
    _c[k] -= o._c[k];
  trim();
  return *this;
}

ArtinPolynomial operator*(ArtinPolynomial const &a, ArtinPolynomial const &b)
{
  a.require_same(b);
  if (a._c.empty() || b._c.empty())
    return ArtinPolynomial(a._group);
  std::vector<BurnsideElement> out(a._c.size() + b._c.size() - 1, BurnsideElement(a._group));
  for (std::size_t i = 0; i < a._c.size(); ++i) {
    if (a._c[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b._c.size(); ++j)
      if (!b._c[j].is_zero())
        out[i + j] += a._c[i] * b._c[j];
  }
  return ArtinPolynomial(a._group, std::move(out));
}

ArtinPolynomial operator*(BurnsideElement const &c, ArtinPolynomial const &a)
{
  return ArtinPolynomial::constant(c) * a;
}

ArtinPolynomial ArtinPolynomial::operator-() const
{
  ArtinPolynomial r = *this;
  for (auto &c : r._c)
    c = -c;
  return r;
}

ArtinPolynomial ArtinPolynomial::pow(unsigned k) const
{
  ArtinPolynomial r = integer(_group, 1);
  for (unsigned i = 0; i < k; ++i)
    r = r * *this;
  return r;
}

bool operator==(ArtinPolynomial const &a, ArtinPolynomial const &b)
{
  return a._group->same_as(*b._group) && a._c == b._c;
}

namespace
{

std::string power(std::size_t k)
{
  if (k == 1)
    return "L";
  return "L^" + std::to_string(k);
}

std::string format_with(std::vector<BurnsideElement> const &c, GaloisContext const &ctx)
{
  if (c.empty())
    return "0";
  int unit = ctx.group()->full_class();
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    auto const &coef = c[k];
    if (coef.is_zero())
      continue;
    bool first = out.empty();
    if (k == 0) {
      // Constant term: written out inline.
      std::string body = ctx.format(coef);
      if (first)
        out = body;
      else if (body.front() == '-')
        out += " - " + body.substr(1);
      else
        out += " + " + body;
      continue;
    }
    if (coef.terms().size() == 1) {
      auto [cls, n] = *coef.terms().begin();
      bool neg = n < 0;
      std::int64_t mag = neg ? -n : n;
      std::string body;
      if (cls != unit)
        body = (mag == 1 ? "" : std::to_string(mag) + "*") + "[" + ctx.label(cls) + "]*" + power(k);
      else
        body = (mag == 1 ? "" : std::to_string(mag) + "*") + power(k);
      if (first)
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    else {
      std::string body = "(" + ctx.format(coef) + ")*" + power(k);
      out += first ? body : " + " + body;
    }
  }
  return out;
}

} // namespace

std::string ArtinPolynomial::format(GaloisContext const &ctx) const
{
  if (!ctx.group()->same_as(*_group))
    throw Error(Errc::MixedContexts, "formatting with the context of another group");
  return format_with(_c, ctx);
}

std::string ArtinPolynomial::to_string() const
{
  auto ctx = GaloisContext::make(_group, default_labels(*_group), {}, {});
  return format_with(_c, *ctx);
}

DivisionResult divide_monic(ArtinPolynomial const &a, ArtinPolynomial const &d)
{
  if (!a.group()->same_as(*d.group()))
    throw Error(Errc::MixedContexts, "division across different Galois groups");
  if (!d.is_monic())
    throw Error(Errc::InvalidInput, "divisor is not monic in L: " + d.to_string());
  auto g = a.group();
  ArtinPolynomial rem = a;
  int dd = d.degree();
  if (rem.degree() < dd)
    return {ArtinPolynomial(g), rem};
  std::vector<BurnsideElement> q(static_cast<std::size_t>(rem.degree() - dd + 1), BurnsideElement(g));
  while (rem.degree() >= dd) {
    auto shift = static_cast<std::size_t>(rem.degree() - dd);
    BurnsideElement lead = rem.coefficient(static_cast<std::size_t>(rem.degree()));
    q[shift] = lead;
    rem -= ArtinPolynomial::monomial(lead, shift) * d;
  }
  return {ArtinPolynomial(g, std::move(q)), rem};
}

ArtinPolynomial exact_divide(ArtinPolynomial const &a, ArtinPolynomial const &d)
{
  auto r = divide_monic(a, d);
  if (!r.remainder.is_zero_polynomial())
    throw Error(Errc::NotDivisible, a.to_string() + " by " + d.to_string() + " leaves remainder " +
                                      r.remainder.to_string());
  return r.quotient;
}

ArtinPolynomial induce(ArtinPolynomial const &over_subgroup)
{
  auto const &parent = over_subgroup.group()->parent();
  if (!parent)
    throw Error(Errc::UnknownSubgroup, "polynomial does not live over a subgroup");
  std::vector<BurnsideElement> out;
  for (auto const &c : over_subgroup.coefficients())
    out.push_back(induce(c));
  return ArtinPolynomial(parent, std::move(out));
}

IntPoly mark_specialization(ArtinPolynomial const &a, int cls)
{
  std::vector<std::int64_t> c;
  for (auto const &coef : a.coefficients())
    c.push_back(mark_at(coef, cls));
  return IntPoly(std::move(c));
}

IntPoly cyclic_specialization(ArtinPolynomial const &a, int element)
{
  auto const &g = *a.group();
  return mark_specialization(a, g.class_of(g.cyclic(element)));
}

ZeroVerdict is_zero(ArtinPolynomial const &a, GaloisContext const &ctx)
{
  if (!ctx.group()->same_as(*a.group()))
    throw Error(Errc::MixedContexts, "zero test with the context of another group");
  ZeroVerdict v;
  v.scope = ctx.axioms_enabled() ? ZeroScope::Ambient : ZeroScope::ModelOnly;
  for (std::size_t k = a.coefficients().size(); k-- > 0;) {
    MarkVector m = marks(a.coefficients()[k]);
    if (!m.is_zero()) {
      v.zero = false;
      v.witness_degree = static_cast<int>(k);
      v.witness = a.coefficients()[k];
      v.witness_marks = m;
      break;
    }
  }
  return v;
}

std::string scope_name(ZeroScope s)
{
  return s == ZeroScope::Ambient ? "ambient" : "model-only";
}

} // namespace motivic
