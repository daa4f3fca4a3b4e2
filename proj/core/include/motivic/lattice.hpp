#ifndef MOTIVIC_LATTICE_HPP
#define MOTIVIC_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gset.hpp"
#include "int_matrix.hpp"
#include "perm_group.hpp"

namespace motivic
{

/// Free finite-rank Z-module with a Γ-action, one invertible integer matrix
/// per generator acting on column vectors of coordinates.
class GaloisLattice
{
public:
  /// Throws InvalidAction if a matrix is not unimodular of the right size or
  /// the matrices violate the group relations.
  static GaloisLattice make(GroupPtr group, std::string name, std::vector<IntMatrix> generator_action);

  static GaloisLattice trivial(GroupPtr group, std::size_t rank, std::string name = "Z");

  /// Z[S] with the basis permuted as the points of S.
  static GaloisLattice permutation(GSet const &s, std::string name);

  /// Rank-1 lattice on which g acts by +1 if g ∈ kernel and by -1 otherwise.
  /// The kernel must be a subgroup of index 1 or 2.
  static GaloisLattice sign(GroupPtr group, ElementMask kernel, std::string name);

  /// {x ∈ Z[S] : Σx = 0} in the basis e_i − e_last (i < |S|−1).
  static GaloisLattice augmentation_kernel(GSet const &s, std::string name);

  /// Z[S]/Z·(1,…,1) in the basis of images of e_i (i < |S|−1).
  static GaloisLattice norm_quotient(GSet const &s, std::string name);

  GroupPtr const &group() const
  { return _group; }
  std::string const &name() const
  { return _name; }
  std::size_t rank() const
  { return _rank; }

  IntMatrix const &generator_action(std::size_t j) const
  { return _gen_action[j]; }
  IntMatrix const &element_action(int element) const
  { return _elem_action[static_cast<std::size_t>(element)]; }

  GaloisLattice renamed(std::string name) const;

  /// The Γ-stable sublattice spanned by the columns of `basis`, expressed in
  /// those coordinates. Throws InvalidInput if the span is not Γ-stable or
  /// the columns are dependent.
  GaloisLattice sublattice(IntMatrix const &basis, std::string name) const;

  /// Same module action (every generator matrix equal).
  bool same_action(GaloisLattice const &other) const;

private:
  GaloisLattice(GroupPtr group, std::string name, std::vector<IntMatrix> generator_action);

  GroupPtr _group;
  std::string _name;
  std::size_t _rank;
  std::vector<IntMatrix> _gen_action;
  std::vector<IntMatrix> _elem_action;
};

GaloisLattice direct_sum(GaloisLattice const &a, GaloisLattice const &b, std::string name);

/// Equivariant homomorphism, matrix of shape target.rank × source.rank.
class LatticeMap
{
public:
  /// Throws Incomposable on shape mismatch and NotEquivariant if
  /// matrix·ρ_src(g) ≠ ρ_tgt(g)·matrix for some generator.
  static LatticeMap make(GaloisLattice source, GaloisLattice target, IntMatrix matrix);

  static LatticeMap identity(GaloisLattice const &l);

  GaloisLattice const &source() const
  { return _source; }
  GaloisLattice const &target() const
  { return _target; }
  IntMatrix const &matrix() const
  { return _matrix; }

  /// this ∘ first
  LatticeMap after(LatticeMap const &first) const;

private:
  LatticeMap(GaloisLattice source, GaloisLattice target, IntMatrix matrix);

  GaloisLattice _source;
  GaloisLattice _target;
  IntMatrix _matrix;
};

/// Action matrices replaced by their inverse transposes.
GaloisLattice dual_lattice(GaloisLattice const &l);

/// The transpose map between dual lattices, dual(target) → dual(source).
LatticeMap dual_map(LatticeMap const &f);

LatticeMap direct_sum(LatticeMap const &f, LatticeMap const &g);

struct SequenceCheck
{
  std::string name;
  bool pass;
};

struct ExactnessVerdict
{
  bool pass = true;
  std::string failed_node; // lattice name at the first violated node
  std::string reason;
  std::vector<SequenceCheck> checks;
  std::string description; // "0 -> A -> B -> C -> 0"
};

/// Checks a chain A0 → A1 → … → Ak of lattice maps: every composite vanishes,
/// image equals kernel at each interior node (compared through canonical
/// Hermite bases) and, when flanked by zeros, the first map is injective and
/// the last surjective. Throws Incomposable if consecutive maps do not meet.
ExactnessVerdict verify_exact_sequence(std::vector<LatticeMap> const &maps, bool flanked_by_zeros = true);

struct ModKernel
{
  GaloisLattice kernel;    // {x : f(x) ≡ 0 mod n}, with inherited action
  LatticeMap inclusion;    // kernel → source
  std::int64_t index;      // [source : kernel]
  std::int64_t image_order; // |f(source) mod n·target|, from Smith invariants
};

/// Throws InvalidModulus for n ≤ 0.
ModKernel kernel_mod_n(LatticeMap const &f, std::int64_t n, std::string name = "ker");

struct IsoVerdict
{
  bool pass;
  std::string reason;
};

/// pass iff det τ = ±1 and τ⁻¹·ρ_a(g)·τ = ρ_b(g) for every generator.
/// Throws InvalidCertificate for a singular or wrongly shaped τ.
IsoVerdict check_iso_certificate(GaloisLattice const &a, GaloisLattice const &b, IntMatrix const &tau);

/// Basis of Hom_Γ(source, target). Column v holds a target.rank × source.rank
/// matrix X (row-major) with X·ρ_source(g) = ρ_target(g)·X.
IntMatrix hom_basis(GaloisLattice const &source, GaloisLattice const &target);

/// The matrix stored in column `v` of a hom_basis result.
IntMatrix hom_element(IntMatrix const &basis, std::size_t v, std::size_t rows, std::size_t cols);

/// Bounded search for τ as above among small integer combinations of a basis
/// of Hom_Γ. nullopt means the bounded search space was exhausted.
std::optional<IntMatrix> find_iso_certificate(GaloisLattice const &a, GaloisLattice const &b,
                                              int coefficient_bound = 2);

enum class SearchStatus
{
  Found,
  None,    // conclusive: an invariant rules out any permutation basis
  Unknown, // bounded search exhausted without a hit
};

struct PermutationBasis
{
  SearchStatus status;
  std::optional<IntMatrix> basis; // columns, in the lattice's coordinates
  std::optional<GSet> gset;       // how Γ permutes the basis columns
  std::string reason;
};

/// Looks for a Z-basis permuted by Γ. Rank is limited to 8.
PermutationBasis find_permutation_basis(GaloisLattice const &l);

/// For a lattice whose generators all act diagonally, the kernel of each
/// coordinate character (one mask per coordinate); nullopt otherwise.
std::optional<std::vector<ElementMask>> diagonal_characters(GaloisLattice const &l);

} // namespace motivic

#endif // MOTIVIC_LATTICE_HPP
