#include "motivic/perm_group.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "motivic/error.hpp"

namespace motivic
{

Perm compose(Perm const &a, Perm const &b)
{
  Perm r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x)
    r[x] = a[static_cast<std::size_t>(b[x])];
  return r;
}

bool is_permutation(Perm const &p, int degree)
{
  if (p.size() != static_cast<std::size_t>(degree))
    return false;
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)])
      return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Perm identity_perm(int degree)
{
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    p[static_cast<std::size_t>(i)] = i;
  return p;
}

namespace
{

std::vector<int> mask_indices(ElementMask m)
{
  std::vector<int> r;
  while (m) {
    r.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return r;
}

// Lexicographic comparison of sorted element index lists.
bool lex_less(ElementMask a, ElementMask b)
{
  auto ia = mask_indices(a), ib = mask_indices(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

} // namespace

GroupPtr PermGroup::generate(int degree,
                             std::vector<Perm> generators,
                             std::vector<std::string> names)
{
  if (degree <= 0)
    throw Error(Errc::InvalidInput, "group degree must be positive");
  for (auto const &g : generators)
    if (!is_permutation(g, degree))
      throw Error(Errc::InvalidInput, "generator is not a permutation of the index set");
  if (names.empty())
    for (std::size_t j = 0; j < generators.size(); ++j)
      names.push_back("s" + std::to_string(j + 1));
  if (names.size() != generators.size())
    throw Error(Errc::InvalidInput, "generator name count does not match generators");
  return std::make_shared<PermGroup>(Token{}, degree, std::move(generators), std::move(names));
}

PermGroup::PermGroup(Token, int degree, std::vector<Perm> generators,
                     std::vector<std::string> names)
: _degree(degree),
  _generators(std::move(generators)),
  _names(std::move(names))
{
  enumerate_elements();
  enumerate_subgroups();
  build_tables();

  std::ostringstream fp;
  fp << "deg" << _degree;
  for (auto const &g : _generators) {
    fp << '|';
    for (int x : g)
      fp << x << ',';
  }
  _fingerprint = fp.str();
}

void PermGroup::enumerate_elements()
{
  _elements.push_back(identity_perm(_degree));
  _lookup.emplace(_elements.back(), 0);
  _word_parent.push_back(-1);
  _word_gen.push_back(-1);

  for (std::size_t head = 0; head < _elements.size(); ++head) {
    for (std::size_t j = 0; j < _generators.size(); ++j) {
      Perm next = compose(_generators[j], _elements[head]);
      if (_lookup.count(next))
        continue;
      if (_elements.size() >= max_order)
        throw Error(Errc::InvalidInput, "group order exceeds " + std::to_string(max_order));
      _lookup.emplace(next, static_cast<int>(_elements.size()));
      _elements.push_back(std::move(next));
      _word_parent.push_back(static_cast<int>(head));
      _word_gen.push_back(static_cast<int>(j));
    }
  }

  std::size_t n = _elements.size();
  _mul.assign(n * n, 0);
  _inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int c = _lookup.at(compose(_elements[a], _elements[b]));
      _mul[a * n + b] = c;
      if (c == 0)
        _inv[a] = static_cast<int>(b);
    }

  for (auto const &g : _generators)
    _generator_elements.push_back(_lookup.at(g));
}

int PermGroup::generator_by_name(std::string const &name) const
{
  for (std::size_t j = 0; j < _names.size(); ++j)
    if (_names[j] == name)
      return static_cast<int>(j);
  return -1;
}

int PermGroup::index_of(Perm const &p) const
{
  auto it = _lookup.find(p);
  return it == _lookup.end() ? -1 : it->second;
}

int PermGroup::element_order(int a) const
{
  int k = 1;
  for (int x = a; x != 0; x = multiply(a, x))
    ++k;
  return k;
}

ElementMask PermGroup::full_mask() const
{
  return order() == 64 ? ~ElementMask{0} : ((ElementMask{1} << order()) - 1);
}

ElementMask PermGroup::closure(ElementMask generators) const
{
  ElementMask result = 1;
  std::vector<int> frontier{0};
  auto gens = mask_indices(generators);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        int y = multiply(g, x);
        if (!(result & (ElementMask{1} << y))) {
          result |= ElementMask{1} << y;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return result;
}

ElementMask PermGroup::conjugate(ElementMask subgroup, int g) const
{
  ElementMask r = 0;
  int gi = inverse(g);
  for (int h : mask_indices(subgroup))
    r |= ElementMask{1} << multiply(multiply(g, h), gi);
  return r;
}

std::vector<int> PermGroup::elements_of(ElementMask mask) const
{
  return mask_indices(mask);
}

bool PermGroup::is_subgroup(ElementMask mask) const
{
  if (!(mask & 1) || (mask & ~full_mask()))
    return false;
  return closure(mask) == mask;
}

std::vector<int> PermGroup::coset_representatives(ElementMask subgroup) const
{
  std::vector<int> reps;
  ElementMask covered = 0;
  auto hs = mask_indices(subgroup);
  for (int g = 0; g < static_cast<int>(order()); ++g) {
    if (covered & (ElementMask{1} << g))
      continue;
    reps.push_back(g);
    for (int h : hs)
      covered |= ElementMask{1} << multiply(g, h);
  }
  return reps;
}

void PermGroup::enumerate_subgroups()
{
  std::vector<ElementMask> subs{1};
  auto known = [&](ElementMask m) { return std::find(subs.begin(), subs.end(), m) != subs.end(); };
  for (int g = 0; g < static_cast<int>(order()); ++g) {
    ElementMask c = cyclic(g);
    if (!known(c))
      subs.push_back(c);
  }
  // Every subgroup is the join of its cyclic subgroups.
  for (bool grew = true; grew;) {
    grew = false;
    std::size_t n = subs.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        ElementMask j = closure(subs[a] | subs[b]);
        if (!known(j)) {
          subs.push_back(j);
          grew = true;
        }
      }
  }

  std::vector<bool> assigned(subs.size(), false);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (assigned[i])
      continue;
    SubgroupClass cls;
    cls.order = static_cast<std::size_t>(std::popcount(subs[i]));
    for (int g = 0; g < static_cast<int>(order()); ++g) {
      ElementMask c = conjugate(subs[i], g);
      if (std::find(cls.members.begin(), cls.members.end(), c) == cls.members.end())
        cls.members.push_back(c);
    }
    for (std::size_t k = i; k < subs.size(); ++k)
      if (std::find(cls.members.begin(), cls.members.end(), subs[k]) != cls.members.end())
        assigned[k] = true;
    std::sort(cls.members.begin(), cls.members.end(), lex_less);
    cls.representative = cls.members.front();
    _classes.push_back(std::move(cls));
  }
  std::sort(_classes.begin(), _classes.end(), [](SubgroupClass const &a, SubgroupClass const &b) {
    if (a.order != b.order)
      return a.order < b.order;
    return lex_less(a.representative, b.representative);
  });

  for (std::size_t c = 0; c < _classes.size(); ++c)
    for (ElementMask m : _classes[c].members)
      _subgroup_index.emplace_back(m, static_cast<int>(c));
  std::sort(_subgroup_index.begin(), _subgroup_index.end());
}

int PermGroup::class_of(ElementMask subgroup) const
{
  auto it = std::lower_bound(_subgroup_index.begin(), _subgroup_index.end(),
                             std::make_pair(subgroup, -1));
  if (it == _subgroup_index.end() || it->first != subgroup)
    throw Error(Errc::UnknownSubgroup, "element set is not a subgroup of the group");
  return it->second;
}

void PermGroup::build_tables()
{
  std::size_t k = _classes.size();
  _marks.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    ElementMask hj = _classes[j].representative;
    auto reps = coset_representatives(hj);
    for (std::size_t i = 0; i < k; ++i) {
      ElementMask hi = _classes[i].representative;
      std::int64_t fixed = 0;
      for (int x : reps)
        // x·H_j is fixed by H_i iff x⁻¹ H_i x ⊆ H_j
        if ((conjugate(hi, inverse(x)) & ~hj) == 0)
          ++fixed;
      _marks[i][j] = fixed;
    }
  }

  _products.assign(k * k, {});
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      ElementMask ha = _classes[a].representative;
      ElementMask hb = _classes[b].representative;
      std::vector<std::int64_t> mult(k, 0);
      ElementMask covered = 0;
      for (int g = 0; g < static_cast<int>(order()); ++g) {
        if (covered & (ElementMask{1} << g))
          continue;
        for (int x : mask_indices(ha))
          for (int y : mask_indices(hb))
            covered |= ElementMask{1} << multiply(multiply(x, g), y);
        // Γ/A × Γ/B = ⊔ over double cosets AgB of Γ/(A ∩ gBg⁻¹)
        ++mult[static_cast<std::size_t>(class_of(ha & conjugate(hb, g)))];
      }
      for (std::size_t c = 0; c < k; ++c)
        if (mult[c] != 0)
          _products[a * k + b].emplace_back(static_cast<int>(c), mult[c]);
    }
}

GroupPtr PermGroup::subgroup(ElementMask mask) const
{
  if (!is_subgroup(mask))
    throw Error(Errc::UnknownSubgroup, "element set is not a subgroup of the group");
  std::vector<Perm> gens;
  std::vector<std::string> names;
  ElementMask span = 1;
  for (int e : mask_indices(mask)) {
    if (span & (ElementMask{1} << e))
      continue;
    gens.push_back(_elements[static_cast<std::size_t>(e)]);
    names.push_back("g" + std::to_string(e));
    span = closure(span | (ElementMask{1} << e));
  }
  auto sub = std::make_shared<PermGroup>(Token{}, _degree, std::move(gens), std::move(names));
  sub->_parent = shared_from_this();
  for (auto const &p : sub->_elements)
    sub->_to_parent.push_back(index_of(p));
  sub->_fingerprint += "<" + _fingerprint + ">";
  return sub;
}

ElementMask PermGroup::to_parent_mask(ElementMask local) const
{
  ElementMask r = 0;
  for (int e : mask_indices(local))
    r |= ElementMask{1} << to_parent(e);
  return r;
}

} // namespace motivic
