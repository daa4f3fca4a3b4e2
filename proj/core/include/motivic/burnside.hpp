#ifndef MOTIVIC_BURNSIDE_HPP
#define MOTIVIC_BURNSIDE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gset.hpp"
#include "perm_group.hpp"

namespace motivic
{

/// Fixed-point counts, one per subgroup conjugacy class in registry order.
struct MarkVector
{
  std::vector<std::int64_t> values;

  bool is_zero() const;
  std::string to_string() const; // "(0,0,0,0,2)"

  friend bool operator==(MarkVector const &, MarkVector const &) = default;
};

/// Element of the Burnside ring B(Γ): an integer combination of transitive
/// Γ-sets [Γ/H], keyed by conjugacy class position in the group's registry.
/// Only nonzero coefficients are stored.
class BurnsideElement
{
public:
  explicit BurnsideElement(GroupPtr group);

  static BurnsideElement basis(GroupPtr group, int cls, std::int64_t coefficient = 1);
  static BurnsideElement integer(GroupPtr group, std::int64_t n);

  GroupPtr const &group() const
  { return _group; }

  std::map<int, std::int64_t> const &terms() const
  { return _coeffs; }

  std::int64_t coefficient(int cls) const;

  bool is_zero() const
  { return _coeffs.empty(); }

  BurnsideElement &operator+=(BurnsideElement const &other);
  BurnsideElement &operator-=(BurnsideElement const &other);
  BurnsideElement &operator*=(std::int64_t k);

  friend BurnsideElement operator+(BurnsideElement a, BurnsideElement const &b)
  { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, BurnsideElement const &b)
  { return a -= b; }
  friend BurnsideElement operator*(BurnsideElement a, std::int64_t k)
  { return a *= k; }
  friend BurnsideElement operator*(std::int64_t k, BurnsideElement a)
  { return a *= k; }
  BurnsideElement operator-() const;

  friend bool operator==(BurnsideElement const &a, BurnsideElement const &b);

private:
  void require_same_group(BurnsideElement const &other) const;
  void add_term(int cls, std::int64_t c);

  GroupPtr _group;
  std::map<int, std::int64_t> _coeffs;
};

/// Table-driven product in B(Γ). Throws MixedGroups.
BurnsideElement burnside_mul(BurnsideElement const &a, BurnsideElement const &b);

inline BurnsideElement operator*(BurnsideElement const &a, BurnsideElement const &b)
{ return burnside_mul(a, b); }

/// Sum over orbits of [Γ/Stab]; invariant under isomorphism of G-sets.
BurnsideElement burnside_normal_form(GSet const &s);

MarkVector marks(BurnsideElement const &a);
std::int64_t mark_at(BurnsideElement const &a, int cls);

/// Induction B(H) → B(Γ), [H/U] ↦ [Γ/U], for an element over a group built
/// by Γ->subgroup(H).
BurnsideElement induce(BurnsideElement const &over_subgroup);

/// Induction from the registry representative of class `subgroup_class` of
/// `group`. `a` must live over that representative subgroup.
BurnsideElement induce(GroupPtr const &group, int subgroup_class, BurnsideElement const &a);

} // namespace motivic

#endif // MOTIVIC_BURNSIDE_HPP
