#include "motivic/burnside.hpp"

#include <sstream>

#include "motivic/checked.hpp"
#include "motivic/error.hpp"

namespace motivic
{

bool MarkVector::is_zero() const
{
  for (auto v : values)
    if (v != 0)
      return false;
  return true;
}

std::string MarkVector::to_string() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i)
    os << (i ? "," : "") << values[i];
  os << ')';
  return os.str();
}

BurnsideElement::BurnsideElement(GroupPtr group)
: _group(std::move(group))
{
  if (!_group)
    throw Error(Errc::InvalidInput, "Burnside element without a group");
}

BurnsideElement BurnsideElement::basis(GroupPtr group, int cls, std::int64_t coefficient)
{
  if (cls < 0 || cls >= static_cast<int>(group->class_count()))
    throw Error(Errc::UnknownSubgroup, "subgroup class " + std::to_string(cls) + " not in registry");
  BurnsideElement r(std::move(group));
  r.add_term(cls, coefficient);
  return r;
}

BurnsideElement BurnsideElement::integer(GroupPtr group, std::int64_t n)
{
  int full = group->full_class();
  return basis(std::move(group), full, n);
}

std::int64_t BurnsideElement::coefficient(int cls) const
{
  auto it = _coeffs.find(cls);
  return it == _coeffs.end() ? 0 : it->second;
}

void BurnsideElement::require_same_group(BurnsideElement const &other) const
{
  if (!_group->same_as(*other._group))
    throw Error(Errc::MixedGroups, "Burnside elements over different groups");
}

void BurnsideElement::add_term(int cls, std::int64_t c)
{
  std::int64_t v = checked_add(coefficient(cls), c);
  if (v == 0)
    _coeffs.erase(cls);
  else
    _coeffs[cls] = v;
}

BurnsideElement &BurnsideElement::operator+=(BurnsideElement const &other)
{
  require_same_group(other);
  for (auto [c, v] : other._coeffs)
    add_term(c, v);
  return *this;
}

BurnsideElement &BurnsideElement::operator-=(BurnsideElement const &other)
{
  require_same_group(other);
  for (auto [c, v] : other._coeffs)
    add_term(c, checked_sub(0, v));
  return *this;
}

BurnsideElement &BurnsideElement::operator*=(std::int64_t k)
{
  if (k == 0) {
    _coeffs.clear();
    return *this;
  }
  for (auto &[c, v] : _coeffs)
    v = checked_mul(v, k);
  return *this;
}

BurnsideElement BurnsideElement::operator-() const
{
  BurnsideElement r = *this;
  return r *= -1;
}

bool operator==(BurnsideElement const &a, BurnsideElement const &b)
{
  return a._group->same_as(*b._group) && a._coeffs == b._coeffs;
}

BurnsideElement burnside_mul(BurnsideElement const &a, BurnsideElement const &b)
{
  if (!a.group()->same_as(*b.group()))
    throw Error(Errc::MixedGroups, "product of Burnside elements over different groups");
  BurnsideElement r(a.group());
  for (auto [ca, va] : a.terms())
    for (auto [cb, vb] : b.terms())
      for (auto [c, m] : a.group()->basis_product(ca, cb))
        r += BurnsideElement::basis(a.group(), c, checked_mul(checked_mul(va, vb), m));
  return r;
}

BurnsideElement burnside_normal_form(GSet const &s)
{
  BurnsideElement r(s.group());
  for (auto const &o : orbit_decompose(s))
    r += BurnsideElement::basis(s.group(), o.stabilizer_class);
  return r;
}

std::int64_t mark_at(BurnsideElement const &a, int cls)
{
  auto const &table = a.group()->mark_table();
  std::int64_t m = 0;
  for (auto [c, v] : a.terms())
    m = checked_add(m, checked_mul(v, table[static_cast<std::size_t>(cls)][static_cast<std::size_t>(c)]));
  return m;
}

MarkVector marks(BurnsideElement const &a)
{
  MarkVector mv;
  for (std::size_t i = 0; i < a.group()->class_count(); ++i)
    mv.values.push_back(mark_at(a, static_cast<int>(i)));
  return mv;
}

BurnsideElement induce(BurnsideElement const &over_subgroup)
{
  auto const &sub = over_subgroup.group();
  auto const &parent = sub->parent();
  if (!parent)
    throw Error(Errc::UnknownSubgroup, "element does not live over a subgroup");
  BurnsideElement r(parent);
  for (auto [c, v] : over_subgroup.terms()) {
    ElementMask u = sub->to_parent_mask(sub->subgroup_classes()[static_cast<std::size_t>(c)].representative);
    r += BurnsideElement::basis(parent, parent->class_of(u), v);
  }
  return r;
}

BurnsideElement induce(GroupPtr const &group, int subgroup_class, BurnsideElement const &a)
{
  if (subgroup_class < 0 || subgroup_class >= static_cast<int>(group->class_count()))
    throw Error(Errc::UnknownSubgroup, "subgroup class " + std::to_string(subgroup_class) + " not in registry");
  auto const &sub = a.group();
  ElementMask rep = group->subgroup_classes()[static_cast<std::size_t>(subgroup_class)].representative;
  if (!sub->parent() || !sub->parent()->same_as(*group) || sub->to_parent_mask(sub->full_mask()) != rep)
    throw Error(Errc::MixedGroups, "element is not over the representative of the named subgroup");
  return induce(a);
}

} // namespace motivic
