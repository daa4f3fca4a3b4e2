#include "motivic/gset.hpp"

#include <algorithm>

#include "motivic/error.hpp"

namespace motivic
{

GSet::GSet(GroupPtr group, int size, std::vector<Perm> generator_action)
: _group(std::move(group)),
  _size(size),
  _gen_action(std::move(generator_action))
{
  if (!_group)
    throw Error(Errc::InvalidInput, "G-set without a group");
  if (size < 0)
    throw Error(Errc::InvalidAction, "negative G-set size");
  if (_gen_action.size() != _group->generator_count())
    throw Error(Errc::InvalidAction, "expected one permutation per group generator");
  for (auto const &p : _gen_action)
    if (!is_permutation(p, size))
      throw Error(Errc::InvalidAction, "generator image is not a bijection of the carrier");

  std::size_t n = _group->order();
  _elem_action.resize(n);
  _elem_action[0] = identity_perm(size);
  for (std::size_t i = 1; i < n; ++i)
    _elem_action[i] = compose(_gen_action[static_cast<std::size_t>(_group->word_generator(static_cast<int>(i)))],
                              _elem_action[static_cast<std::size_t>(_group->word_parent(static_cast<int>(i)))]);

  // The extension along words is well defined iff it is multiplicative.
  for (std::size_t j = 0; j < _group->generator_count(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      int gi = _group->multiply(_group->generator_element(j), static_cast<int>(i));
      if (_elem_action[static_cast<std::size_t>(gi)] != compose(_gen_action[j], _elem_action[i]))
        throw Error(Errc::InvalidAction, "generator images violate the group relations");
    }
}

GSet GSet::from_action(GroupPtr group, int size, std::vector<Perm> generator_action)
{
  return GSet(std::move(group), size, std::move(generator_action));
}

GSet GSet::cosets(GroupPtr group, ElementMask subgroup)
{
  if (!group->is_subgroup(subgroup))
    throw Error(Errc::UnknownSubgroup, "coset space of a non-subgroup");
  auto reps = group->coset_representatives(subgroup);
  auto hs = group->elements_of(subgroup);
  // coset of each element
  std::vector<int> coset_of(group->order(), -1);
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (int h : hs)
      coset_of[static_cast<std::size_t>(group->multiply(reps[c], h))] = static_cast<int>(c);

  std::vector<Perm> action;
  for (std::size_t j = 0; j < group->generator_count(); ++j) {
    Perm p(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      p[c] = coset_of[static_cast<std::size_t>(group->multiply(group->generator_element(j), reps[c]))];
    action.push_back(std::move(p));
  }
  return GSet(std::move(group), static_cast<int>(reps.size()), std::move(action));
}

GSet GSet::points(GroupPtr group, int n)
{
  std::vector<Perm> action(group->generator_count(), identity_perm(n));
  return GSet(std::move(group), n, std::move(action));
}

GSet GSet::disjoint_union(GSet const &other) const
{
  if (!_group->same_as(*other._group))
    throw Error(Errc::MixedGroups, "disjoint union over different groups");
  std::vector<Perm> action;
  for (std::size_t j = 0; j < _gen_action.size(); ++j) {
    Perm p = _gen_action[j];
    for (int x : other._gen_action[j])
      p.push_back(x + _size);
    action.push_back(std::move(p));
  }
  return GSet(_group, _size + other._size, std::move(action));
}

GSet GSet::product(GSet const &other) const
{
  if (!_group->same_as(*other._group))
    throw Error(Errc::MixedGroups, "product over different groups");
  int m = other._size;
  std::vector<Perm> action;
  for (std::size_t j = 0; j < _gen_action.size(); ++j) {
    Perm p(static_cast<std::size_t>(_size * m));
    for (int a = 0; a < _size; ++a)
      for (int b = 0; b < m; ++b)
        p[static_cast<std::size_t>(a * m + b)] =
          _gen_action[j][static_cast<std::size_t>(a)] * m + other._gen_action[j][static_cast<std::size_t>(b)];
    action.push_back(std::move(p));
  }
  return GSet(_group, _size * m, std::move(action));
}

GSet GSet::relabel(Perm const &relabel) const
{
  if (!is_permutation(relabel, _size))
    throw Error(Errc::InvalidInput, "relabeling is not a bijection");
  Perm inv(relabel.size());
  for (std::size_t x = 0; x < relabel.size(); ++x)
    inv[static_cast<std::size_t>(relabel[x])] = static_cast<int>(x);
  std::vector<Perm> action;
  for (auto const &p : _gen_action)
    action.push_back(compose(relabel, compose(p, inv)));
  return GSet(_group, _size, std::move(action));
}

GSet GSet::restrict_to(GroupPtr const &subgroup) const
{
  std::vector<int> all(static_cast<std::size_t>(_size));
  for (int i = 0; i < _size; ++i)
    all[static_cast<std::size_t>(i)] = i;
  return restrict_points(all, subgroup);
}

GSet GSet::restrict_points(std::vector<int> const &points, GroupPtr const &subgroup) const
{
  bool whole = subgroup->same_as(*_group);
  if (!whole && (!subgroup->parent() || !subgroup->parent()->same_as(*_group)))
    throw Error(Errc::MixedGroups, "restriction to a group that is not a subgroup of this one");
  std::vector<int> local(static_cast<std::size_t>(_size), -1);
  for (std::size_t k = 0; k < points.size(); ++k)
    local[static_cast<std::size_t>(points[k])] = static_cast<int>(k);
  std::vector<Perm> action;
  for (std::size_t j = 0; j < subgroup->generator_count(); ++j) {
    int g = subgroup->generator_element(j);
    if (!whole)
      g = subgroup->to_parent(g);
    Perm p(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      int y = local[static_cast<std::size_t>(act(g, points[k]))];
      if (y < 0)
        throw Error(Errc::InvalidAction, "point subset is not stable under the subgroup");
      p[k] = y;
    }
    action.push_back(std::move(p));
  }
  return GSet(subgroup, static_cast<int>(points.size()), std::move(action));
}

std::vector<Orbit> orbit_decompose(GSet const &s)
{
  auto const &g = *s.group();
  std::vector<Orbit> orbits;
  std::vector<bool> seen(static_cast<std::size_t>(s.size()), false);
  for (int p = 0; p < s.size(); ++p) {
    if (seen[static_cast<std::size_t>(p)])
      continue;
    Orbit o;
    o.stabilizer = 0;
    for (int e = 0; e < static_cast<int>(g.order()); ++e) {
      int q = s.act(e, p);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = true;
        o.points.push_back(q);
      }
      if (q == p)
        o.stabilizer |= ElementMask{1} << e;
    }
    std::sort(o.points.begin(), o.points.end());
    o.stabilizer_class = g.class_of(o.stabilizer);
    orbits.push_back(std::move(o));
  }
  return orbits;
}

} // namespace motivic
