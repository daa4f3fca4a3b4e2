#ifndef MOTIVIC_GSET_HPP
#define MOTIVIC_GSET_HPP

#include <vector>

#include "perm_group.hpp"

namespace motivic
{

/// A finite set with an action of a PermGroup, given by one permutation per
/// generator. The action is checked to be a homomorphism on construction, so
/// every GSet in circulation is valid.
class GSet
{
public:
  /// Throws InvalidAction if the generator images do not define an action.
  static GSet from_action(GroupPtr group, int size, std::vector<Perm> generator_action);

  /// The transitive set Γ/H; point 0 is the coset H itself.
  static GSet cosets(GroupPtr group, ElementMask subgroup);

  static GSet regular(GroupPtr group)
  { return cosets(group, 1); }

  /// n fixed points.
  static GSet points(GroupPtr group, int n);

  GroupPtr const &group() const
  { return _group; }

  int size() const
  { return _size; }

  Perm const &generator_action(std::size_t j) const
  { return _gen_action[j]; }

  Perm const &element_action(int element) const
  { return _elem_action[static_cast<std::size_t>(element)]; }

  int act(int element, int point) const
  { return element_action(element)[static_cast<std::size_t>(point)]; }

  GSet disjoint_union(GSet const &other) const;

  /// Diagonal action on pairs; the pair (a, b) is point a*other.size() + b.
  GSet product(GSet const &other) const;

  /// Renames point x to relabel[x].
  GSet relabel(Perm const &relabel) const;

  /// Restriction of the action to a subgroup obtained from group()->subgroup().
  GSet restrict_to(GroupPtr const &subgroup) const;

  /// The subset `points` (which must be stable under `subgroup`) as a set for
  /// that subgroup (or the whole group), numbered in the given order.
  GSet restrict_points(std::vector<int> const &points, GroupPtr const &subgroup) const;

private:
  GSet(GroupPtr group, int size, std::vector<Perm> generator_action);

  GroupPtr _group;
  int _size;
  std::vector<Perm> _gen_action;
  std::vector<Perm> _elem_action;
};

struct Orbit
{
  std::vector<int> points;   // ascending
  ElementMask stabilizer;    // stabilizer of points.front()
  int stabilizer_class;
};

/// Orbits ordered by smallest point.
std::vector<Orbit> orbit_decompose(GSet const &s);

} // namespace motivic

#endif // MOTIVIC_GSET_HPP
