#ifndef MOTIVIC_BIQUADRATIC_HPP
#define MOTIVIC_BIQUADRATIC_HPP

#include <cstdint>

#include "context.hpp"
#include "lattice.hpp"

namespace motivic::biquadratic
{

// Named lattices of the biquadratic setup. Γ = ⟨(12),(34)⟩ acts on four
// indices with σ1 = (12), σ2 = (34); E = E1 × E2 is the Γ-set {1,2,3,4}.
// Every constructor expects the built-in biquadratic context.

/// The Γ-set {1,2,3,4} (isomorphic to E1 ⊔ E2).
GSet index_set(GaloisContext const &ctx);

/// X(G) = Z^4/Z(1,1,1,1) in the basis of the images of e1, e2, e3.
GaloisLattice character_lattice_G(GaloisContext const &ctx);

/// X(G') = {x ∈ Z^4 : Σx = 0} in the basis e1−e4, e2−e4, e3−e4.
GaloisLattice sum_zero(GaloisContext const &ctx);

/// π: X(G) → Z, (a,b,c,d) ↦ a+b−c−d.
LatticeMap pi_G(GaloisContext const &ctx);

/// X(T) = ker π in the basis v1 = (1,0,1,0), v2 = (1,0,0,1).
GaloisLattice character_lattice_T(GaloisContext const &ctx);
LatticeMap inclusion_T(GaloisContext const &ctx);

/// The expected action on X(T): σ1 ↦ ((0,−1),(−1,0)), σ2 ↦ swap.
GaloisLattice stated_T(GaloisContext const &ctx);

/// Q = Z{e13, e23, e14, e24} with Γ permuting indices.
GaloisLattice q_lattice(GaloisContext const &ctx);
/// The sign character, kernel ⟨σ1σ2⟩.
GaloisLattice sign_lattice(GaloisContext const &ctx);
/// φ: Z^± → Q, 1 ↦ e13 − e23 − e14 + e24.
LatticeMap phi(GaloisContext const &ctx);
/// π: Q → X(G'), e_ij ↦ e_i − e_j.
LatticeMap pi_Q(GaloisContext const &ctx);

/// X(R_E) = Z[E1 ⊔ E2] → Z, the augmentation; its kernel is X(G').
LatticeMap augmentation_E(GaloisContext const &ctx);
LatticeMap inclusion_sum_zero(GaloisContext const &ctx);

/// 0 → X(R_E1/G_m) ⊕ X(R_E2/G_m) → X(G') → Z → 0, the lattice form of
/// 1 → G_m → G' → (R_E1/G_m) × (R_E2/G_m) → 1.
struct TorsorSequence
{
  LatticeMap inclusion;
  LatticeMap projection;
};
TorsorSequence g_prime_over_norm_tori(GaloisContext const &ctx);

// Torsion construction, n = 2m.

struct TorsionLattices
{
  std::int64_t n;
  ModKernel kernel;          // N = ker(Q → X(G') → X(G')/n)
  IntMatrix stated_basis;    // n e13, n e23, n e14, v as columns in Q
  GaloisLattice n_lattice;   // N in the stated basis
  LatticeMap n_inclusion;    // N → Q
  LatticeMap pi_n;           // N → Z, a v13 + b v23 + c v14 + d v ↦ a+b+c
  GaloisLattice n_prime;     // ker π_N in the basis v, v13 − v23, v13 − v14
  LatticeMap n_prime_inclusion;
};

/// Throws UnsupportedParameter for odd n or n < 2.
TorsionLattices torsion_lattices(GaloisContext const &ctx, std::int64_t n);

/// The action on N' as stated with entries 2m, and its diagonal target.
GaloisLattice stated_n_prime(GaloisContext const &ctx, std::int64_t m);
GaloisLattice diagonal_n_prime(GaloisContext const &ctx);
/// τ = ((1,m,m),(0,1,0),(0,0,1)).
IntMatrix stated_tau(std::int64_t m);
/// diag(−1,1,1): the orientation change between the engine's basis and the
/// stated matrices.
IntMatrix orientation_certificate();

} // namespace motivic::biquadratic

#endif // MOTIVIC_BIQUADRATIC_HPP
