#ifndef MOTIVIC_CONTEXT_HPP
#define MOTIVIC_CONTEXT_HPP

#include <memory>
#include <string>
#include <vector>

#include "burnside.hpp"
#include "gset.hpp"
#include "lattice.hpp"
#include "perm_group.hpp"

namespace motivic
{

struct AxiomFlag
{
  bool enabled = true;
  std::string provenance;
};

class GaloisContext;
using ContextPtr = std::shared_ptr<GaloisContext const>;

/// A Galois group Γ = Gal(K/F) together with names for the intermediate
/// fields (one per subgroup conjugacy class) and the two independence axioms
/// that make zero tests in the model transfer to the Grothendieck ring.
class GaloisContext
{
public:
  /// Labels are given in registry order. Throws InvalidInput if the count
  /// does not match or a label repeats.
  static ContextPtr make(GroupPtr group, std::vector<std::string> labels, AxiomFlag a1, AxiomFlag a2);

  /// Γ = ⟨(12),(34)⟩ ⊂ S4 with generators s1 ↔ σ1, s2 ↔ σ2 and labels
  /// K, E1, E2, E12, F.
  static ContextPtr biquadratic();

  /// Γ = C2 acting on two points; labels E (trivial subgroup), F.
  static ContextPtr quadratic();

  /// Parses the JSON context format:
  ///   {"group":{"degree":4,"generators":[[1,0,2,3],[0,1,3,2]],"names":["s1","s2"]},
  ///    "labels":[{"stabilizer":["s1"],"name":"E1"}, ...],
  ///    "axioms":{"A1":true,"A2":true}}
  /// Missing labels default to K for the trivial subgroup, F for Γ and H<i>
  /// otherwise. Throws InvalidInput with a line/column location on bad JSON.
  static ContextPtr from_json(std::string const &text);

  GroupPtr const &group() const
  { return _group; }
  std::vector<std::string> const &labels() const
  { return _labels; }
  std::string const &label(int cls) const
  { return _labels[static_cast<std::size_t>(cls)]; }

  /// Class index of a label; throws UnknownSubgroup.
  int class_of_label(std::string const &name) const;

  AxiomFlag const &coefficient_independence() const
  { return _a1; }
  AxiomFlag const &field_independence() const
  { return _a2; }
  bool axioms_enabled() const
  { return _a1.enabled && _a2.enabled; }

  /// "2 + [K] - [E1]"; the unit class prints as an integer.
  std::string format(BurnsideElement const &a) const;

  /// Inverse of format, e.g. "2+[K]-[E1]-[E2]-[E12]" or "3*[E1] - 1".
  /// Throws InvalidInput.
  BurnsideElement parse_element(std::string const &text) const;

  /// GSet from a compact spec: "regular", "point", "coset:E12", "split:4",
  /// "2*coset:E1 + point". Throws InvalidInput.
  GSet parse_gset(std::string const &text) const;

  /// GSet from JSON {"transitive":[{"stabilizer":["s1"]}, ...]} where each
  /// stabilizer is listed by generator words ("s1", "s1*s2") or
  /// {"action":[[...],[...]]} with one image array per generator.
  GSet gset_from_json(std::string const &text) const;

  /// Character lattice from "perm:<gset>", "aug:<gset>" (sum-zero part),
  /// "quot:<gset>" (modulo the diagonal), or JSON
  /// {"action":[[[row],...], ...]} with one integer matrix per generator.
  /// Throws InvalidInput or InvalidAction.
  GaloisLattice parse_lattice(std::string const &text) const;

private:
  GaloisContext(GroupPtr group, std::vector<std::string> labels, AxiomFlag a1, AxiomFlag a2);

  GroupPtr _group;
  std::vector<std::string> _labels;
  AxiomFlag _a1;
  AxiomFlag _a2;
};

/// Labels used when no context names the classes of a group.
std::vector<std::string> default_labels(PermGroup const &group);

} // namespace motivic

#endif // MOTIVIC_CONTEXT_HPP
