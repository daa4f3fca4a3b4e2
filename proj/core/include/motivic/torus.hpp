#ifndef MOTIVIC_TORUS_HPP
#define MOTIVIC_TORUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "artin_polynomial.hpp"
#include "context.hpp"
#include "derivation.hpp"
#include "gset.hpp"
#include "lattice.hpp"
#include "stack_class.hpp"

namespace motivic
{

/// Class of R_{A/F}(G_m) for the étale algebra A of the Γ-set S.
///
/// Stratifying the affine space R_{A/F}(A^1) by which coordinates vanish
/// gives L^|S| = Σ over Γ-orbits of subsets S' of Ind_{Stab S'} qs(S'),
/// where S' is viewed as a Stab(S')-set. The full subset is the only term
/// of degree |S|, so the identity determines qs(S) from smaller sets.
/// Results are memoized per (group, isomorphism class of S). Sets larger
/// than 16 points throw UnsupportedParameter.
ArtinPolynomial quasi_split_class(GSet const &s);

/// Class of R_{A/F}(P^1): Σ over Γ-orbits of subsets S' of [Γ/Stab S']·L^|S'|.
ArtinPolynomial weil_restriction_p1_class(GSet const &s);

SpecialEntry quasi_split_special(std::string name, GSet const &s);
SpecialEntry lefschetz_special(GroupPtr group);

/// Registers G_m, L and R_X for every labelled field X ≠ F.
void register_standard_specials(SpecialRegistry &registry, GaloisContext const &ctx);

/// R^{(1)}_{E/F}(G_m) for the quadratic algebra E = K^h. Checks at lattice
/// level that it is the quotient R_E/G_m and divides qs(Γ/h) by L − 1.
/// Throws NotQuadratic if h does not have index 2.
ClassResult norm_one_quadratic_class(GaloisContext const &ctx, ElementMask h);

/// Σ over orbits of the coefficientwise induction of the payload attached to
/// that orbit. payload[i] must live over strata.group()->subgroup(stabilizer
/// of the first point of orbit i). Throws BadPayload.
ArtinPolynomial twist_of_induced_strata(GSet const &strata, std::vector<ArtinPolynomial> const &payload);

enum class StratumShape
{
  ProjectiveLine,
  MultiplicativeGroup,
  AffineLine,
};

struct InvolutionStratum
{
  StratumShape shape;
  bool inversion;            // z ↦ 1/z, otherwise trivial action
  bool rational_fixed_point; // a fixed point defined over F
};

/// A twisted P^1 with a rational point is P^1, class L + 1. Throws
/// RuleScopeError for any other shape or without a fixed point.
ClassResult fixed_point_untwist(GroupPtr group, InvolutionStratum const &stratum, std::string name);

/// A verified short exact sequence 0 → X(H) → X(G) → X(N) → 0 of character
/// data, either of lattices or of a lattice and a finite quotient.
struct SequenceCertificate
{
  bool verified;
  std::string description;
  GaloisLattice middle; // character lattice of the middle group
};

SequenceCertificate certify_sequence(ExactnessVerdict const &v, GaloisLattice const &middle);
/// 0 → ker → P → image mod n → 0; verified when the index of the kernel
/// equals the order of the image.
SequenceCertificate certify_sequence(ModKernel const &k, std::int64_t n);

/// {BN} = {H}/{G} for 1 → N → G → H → 1 with G special. Throws BadSequence
/// for an unverified sequence and NotSpecial if the middle entry is not in
/// the registry or its certificate does not match the middle lattice.
ClassResult bn_from_special_sequence(SequenceCertificate const &seq, SpecialEntry const &middle,
                                     ClassResult const &quotient, SpecialRegistry const &registry,
                                     GaloisContext const &ctx, std::string name);

/// Explicit quasi-split certificate for a lattice: column x of `basis` is the
/// image of point x of `gset`.
struct QuasiSplitFlank
{
  GSet gset;
  IntMatrix basis;
};

struct ResolutionNames
{
  std::string torus;  // T
  std::string middle; // T2
  std::string kernel; // T1
  std::string dual_classifying; // B of the dual of T
};

struct ResolutionResult
{
  ClassResult torus;
  ClassResult dual_classifying;
};

/// From 1 → T1 → T2 → T → 1 with T1, T2 quasi-split, given as the lattice
/// sequence 0 → X(T) → X(T2) → X(T1) → 0 (maps[0], maps[1]):
/// {T} = {T2}/{T1} and {B T^v} = {T1}/{T2}. Flanks without an explicit
/// certificate go through find_permutation_basis. Throws BadSequence and
/// NotQuasiSplit.
ResolutionResult class_and_Bdual_from_resolution(std::vector<LatticeMap> const &maps,
                                                 std::optional<QuasiSplitFlank> const &middle,
                                                 std::optional<QuasiSplitFlank> const &kernel,
                                                 SpecialRegistry &registry, GaloisContext const &ctx,
                                                 ResolutionNames const &names);

struct QuasiSplitResolution
{
  QuasiSplitFlank middle; // S2, identity basis
  QuasiSplitFlank kernel; // S1, identity basis
  std::vector<LatticeMap> maps; // l → Z[S2] → Z[S1]
};

/// Searches for 0 → l → Z[S2] → Z[S1] → 0. S1 runs over Γ-sets with at most
/// `max_kernel_points` points and S2 over Γ-sets whose permutation character
/// equals χ_l + χ_{S1}. Surjections are tried among combinations of a
/// Hom_Γ basis with coefficients in {-1, 0, 1}; the kernel must be
/// isomorphic to l by certificate. nullopt once the search space or `budget`
/// candidate maps are exhausted, which proves nothing.
std::optional<QuasiSplitResolution> find_quasi_split_resolution(GaloisLattice const &l, int max_kernel_points = 2,
                                                                std::size_t budget = 200000);

/// {T} for the torus with character lattice l: directly when l has a
/// permuted basis, otherwise through find_quasi_split_resolution with
/// kernels of up to 3 points. Throws NotQuasiSplit when neither is found.
ClassResult torus_class(GaloisLattice const &l, GaloisContext const &ctx, std::string name);

/// From 1 → G_m → X → Y → 1, given as 0 → X(Y) → X(X) → Z → 0 with Z
/// trivial: {X} = (L − 1){Y}. Throws BadSequence.
ClassResult gm_torsor_factor(std::vector<LatticeMap> const &maps, ClassResult const &base,
                             GaloisContext const &ctx, std::string name);

struct CharpolyCheck
{
  int element;
  IntPoly specialized; // cyclic specialization of the class at the element
  IntPoly charpoly;    // det(q·I − ρ(element))
  bool pass;
};

/// One check per group element.
std::vector<CharpolyCheck> charpoly_oracle(ArtinPolynomial const &cls, GaloisLattice const &lattice);

} // namespace motivic

#endif // MOTIVIC_TORUS_HPP
