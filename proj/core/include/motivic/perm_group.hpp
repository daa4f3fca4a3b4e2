#ifndef MOTIVIC_PERM_GROUP_HPP
#define MOTIVIC_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace motivic
{

/// Image array of a permutation of {0..degree-1}.
using Perm = std::vector<int>;

/// Subset of a group's element table, bit i standing for element i.
using ElementMask = std::uint64_t;

/// a∘b, i.e. x ↦ a[b[x]].
Perm compose(Perm const &a, Perm const &b);

bool is_permutation(Perm const &p, int degree);

Perm identity_perm(int degree);

class PermGroup;
using GroupPtr = std::shared_ptr<PermGroup const>;

struct SubgroupClass
{
  ElementMask representative;       // member with the smallest sorted element list
  std::vector<ElementMask> members; // all conjugates
  std::size_t order;
};

/// A finite permutation group stored by full element enumeration.
///
/// Elements are numbered by breadth-first closure from the identity, applying
/// generators in declaration order on the left; element 0 is the identity.
/// For the Klein group generated by (12),(34) this gives 1, σ1, σ2, σ1σ2.
/// Conjugacy classes of subgroups are ordered by (order, sorted element index
/// list), which fixes mark-vector coordinates and printed output.
///
/// Groups are immutable once built and safe to share between threads.
class PermGroup : public std::enable_shared_from_this<PermGroup>
{
  struct Token {};

public:
  static constexpr std::size_t max_order = 64;

  static GroupPtr generate(int degree,
                           std::vector<Perm> generators,
                           std::vector<std::string> names = {});

  PermGroup(Token, int degree, std::vector<Perm> generators,
            std::vector<std::string> names);

  int degree() const
  { return _degree; }

  std::size_t order() const
  { return _elements.size(); }

  std::size_t generator_count() const
  { return _generators.size(); }

  Perm const &generator(std::size_t j) const
  { return _generators[j]; }

  std::string const &generator_name(std::size_t j) const
  { return _names[j]; }

  /// -1 if no generator carries that name.
  int generator_by_name(std::string const &name) const;

  int generator_element(std::size_t j) const
  { return _generator_elements[j]; }

  Perm const &element(int i) const
  { return _elements[static_cast<std::size_t>(i)]; }

  /// -1 if p is not in the group.
  int index_of(Perm const &p) const;

  int multiply(int a, int b) const
  { return _mul[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }

  int inverse(int a) const
  { return _inv[static_cast<std::size_t>(a)]; }

  int element_order(int a) const;

  // Every non-identity element i equals generator(word_generator(i)) ∘ element(word_parent(i)).
  int word_parent(int i) const
  { return _word_parent[static_cast<std::size_t>(i)]; }
  int word_generator(int i) const
  { return _word_gen[static_cast<std::size_t>(i)]; }

  ElementMask full_mask() const;
  ElementMask trivial_mask() const
  { return 1; }

  ElementMask closure(ElementMask generators) const;
  ElementMask cyclic(int element) const
  { return closure(ElementMask{1} << element); }
  ElementMask conjugate(ElementMask subgroup, int g) const;
  std::vector<int> elements_of(ElementMask mask) const;
  bool is_subgroup(ElementMask mask) const;

  /// Left coset representatives (smallest index in each coset), ascending.
  std::vector<int> coset_representatives(ElementMask subgroup) const;

  std::vector<SubgroupClass> const &subgroup_classes() const
  { return _classes; }

  std::size_t class_count() const
  { return _classes.size(); }

  /// Registry position of the conjugacy class of a subgroup; throws
  /// UnknownSubgroup when the mask is not a subgroup.
  int class_of(ElementMask subgroup) const;

  int trivial_class() const
  { return 0; }
  int full_class() const
  { return static_cast<int>(_classes.size()) - 1; }

  /// The subgroup as a standalone group that remembers its embedding.
  GroupPtr subgroup(ElementMask mask) const;

  GroupPtr const &parent() const
  { return _parent; }
  int to_parent(int local) const
  { return _to_parent[static_cast<std::size_t>(local)]; }
  ElementMask to_parent_mask(ElementMask local) const;

  /// Identifies the group together with its generator order and embedding.
  std::string const &fingerprint() const
  { return _fingerprint; }

  bool same_as(PermGroup const &other) const
  { return this == &other || _fingerprint == other._fingerprint; }

  /// marks[i][j] = number of points of Γ/H_j fixed by H_i.
  std::vector<std::vector<std::int64_t>> const &mark_table() const
  { return _marks; }

  /// [Γ/H_i]·[Γ/H_j] as (class, multiplicity) pairs, via double cosets.
  std::vector<std::pair<int, std::int64_t>> const &basis_product(int i, int j) const
  { return _products[static_cast<std::size_t>(i) * _classes.size() + static_cast<std::size_t>(j)]; }

private:
  void enumerate_elements();
  void enumerate_subgroups();
  void build_tables();

  int _degree;
  std::vector<Perm> _generators;
  std::vector<std::string> _names;
  std::vector<int> _generator_elements;
  std::vector<Perm> _elements;
  std::map<Perm, int> _lookup;
  std::vector<int> _word_parent;
  std::vector<int> _word_gen;
  std::vector<int> _mul;
  std::vector<int> _inv;
  std::vector<SubgroupClass> _classes;
  std::vector<std::pair<ElementMask, int>> _subgroup_index; // sorted by mask
  std::vector<std::vector<std::int64_t>> _marks;
  std::vector<std::vector<std::pair<int, std::int64_t>>> _products;
  GroupPtr _parent;
  std::vector<int> _to_parent;
  std::string _fingerprint;
};

} // namespace motivic

#endif // MOTIVIC_PERM_GROUP_HPP
