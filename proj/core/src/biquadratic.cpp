#include "motivic/biquadratic.hpp"

#include "motivic/error.hpp"

namespace motivic::biquadratic
{

namespace
{

void require_biquadratic(GaloisContext const &ctx)
{
  if (!ctx.group()->same_as(*GaloisContext::biquadratic()->group()))
    throw Error(Errc::MixedContexts, "built-in lattices need the biquadratic context");
}

} // namespace

GSet index_set(GaloisContext const &ctx)
{
  require_biquadratic(ctx);
  auto const &g = ctx.group();
  return GSet::from_action(g, 4, {g->generator(0), g->generator(1)});
}

GaloisLattice character_lattice_G(GaloisContext const &ctx)
{
  return GaloisLattice::norm_quotient(index_set(ctx), "X(G)");
}

GaloisLattice sum_zero(GaloisContext const &ctx)
{
  return GaloisLattice::augmentation_kernel(index_set(ctx), "X(G')");
}

LatticeMap pi_G(GaloisContext const &ctx)
{
  return LatticeMap::make(character_lattice_G(ctx), GaloisLattice::trivial(ctx.group(), 1), IntMatrix{{1, 1, -1}});
}

namespace
{

IntMatrix t_basis()
{
  // v1 = ē1 + ē3, v2 = ē1 + ē4 = −ē2 − ē3
  return IntMatrix{{1, 0}, {0, -1}, {1, -1}};
}

} // namespace

GaloisLattice character_lattice_T(GaloisContext const &ctx)
{
  return character_lattice_G(ctx).sublattice(t_basis(), "X(T)");
}

LatticeMap inclusion_T(GaloisContext const &ctx)
{
  return LatticeMap::make(character_lattice_T(ctx), character_lattice_G(ctx), t_basis());
}

GaloisLattice stated_T(GaloisContext const &ctx)
{
  require_biquadratic(ctx);
  return GaloisLattice::make(ctx.group(), "X(T) stated", {IntMatrix{{0, -1}, {-1, 0}}, IntMatrix{{0, 1}, {1, 0}}});
}

GaloisLattice q_lattice(GaloisContext const &ctx)
{
  require_biquadratic(ctx);
  // e13, e23, e14, e24; (12) swaps the first index, (34) the second
  auto s = GSet::from_action(ctx.group(), 4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  return GaloisLattice::permutation(s, "Q");
}

GaloisLattice sign_lattice(GaloisContext const &ctx)
{
  require_biquadratic(ctx);
  auto const &g = ctx.group();
  return GaloisLattice::sign(g, g->subgroup_classes()[static_cast<std::size_t>(ctx.class_of_label("E12"))].representative,
                             "Z^-");
}

LatticeMap phi(GaloisContext const &ctx)
{
  return LatticeMap::make(sign_lattice(ctx), q_lattice(ctx), IntMatrix{{1}, {-1}, {-1}, {1}});
}

LatticeMap pi_Q(GaloisContext const &ctx)
{
  // e_i − e_j in the basis e_k − e4
  return LatticeMap::make(q_lattice(ctx), sum_zero(ctx), IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}, {-1, -1, 0, 0}});
}

LatticeMap augmentation_E(GaloisContext const &ctx)
{
  return LatticeMap::make(GaloisLattice::permutation(index_set(ctx), "Z[E]"), GaloisLattice::trivial(ctx.group(), 1),
                          IntMatrix{{1, 1, 1, 1}});
}

LatticeMap inclusion_sum_zero(GaloisContext const &ctx)
{
  return LatticeMap::make(sum_zero(ctx), GaloisLattice::permutation(index_set(ctx), "Z[E]"),
                          IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
}

TorsorSequence g_prime_over_norm_tori(GaloisContext const &ctx)
{
  auto const &g = ctx.group();
  auto rep = [&](char const *label) {
    return g->subgroup_classes()[static_cast<std::size_t>(ctx.class_of_label(label))].representative;
  };
  // e3 − e4 spans X(R_E1/G_m), e1 − e2 spans X(R_E2/G_m).
  auto base = direct_sum(GaloisLattice::sign(g, rep("E1"), "X(R_E1/G_m)"),
                         GaloisLattice::sign(g, rep("E2"), "X(R_E2/G_m)"), "X(R_E1/G_m x R_E2/G_m)");
  auto inclusion = LatticeMap::make(base, sum_zero(ctx), IntMatrix{{0, 1}, {0, -1}, {1, 0}});
  // restriction of characters to the G_m sitting in the E1 factor: x ↦ x3 + x4
  auto projection = LatticeMap::make(sum_zero(ctx), GaloisLattice::trivial(g, 1), IntMatrix{{-1, -1, 0}});
  return {inclusion, projection};
}

TorsionLattices torsion_lattices(GaloisContext const &ctx, std::int64_t n)
{
  if (n < 2 || n % 2 != 0)
    throw Error(Errc::UnsupportedParameter, "torsion order must be even and at least 2, got " + std::to_string(n));
  auto q = q_lattice(ctx);
  auto k = kernel_mod_n(pi_Q(ctx), n, "N(kernel)");

  IntMatrix stated{{n, 0, 0, 1}, {0, n, 0, -1}, {0, 0, n, -1}, {0, 0, 0, 1}};
  auto nl = q.sublattice(stated, "N");
  auto inc = LatticeMap::make(nl, q, stated);
  auto pin = LatticeMap::make(nl, GaloisLattice::trivial(ctx.group(), 1), IntMatrix{{1, 1, 1, 0}});
  IntMatrix np_basis{{0, 1, 1}, {0, -1, 0}, {0, 0, -1}, {1, 0, 0}};
  auto np = nl.sublattice(np_basis, "N'");
  auto np_inc = LatticeMap::make(np, nl, np_basis);
  return {n, std::move(k), stated, nl, inc, pin, np, np_inc};
}

GaloisLattice stated_n_prime(GaloisContext const &ctx, std::int64_t m)
{
  require_biquadratic(ctx);
  return GaloisLattice::make(ctx.group(), "N' stated",
                             {IntMatrix{{-1, 0, 2 * m}, {0, -1, 0}, {0, 0, 1}},
                              IntMatrix{{-1, 2 * m, 0}, {0, 1, 0}, {0, 0, -1}}});
}

GaloisLattice diagonal_n_prime(GaloisContext const &ctx)
{
  require_biquadratic(ctx);
  return GaloisLattice::make(ctx.group(), "N' diagonal",
                             {IntMatrix::diagonal({-1, -1, 1}), IntMatrix::diagonal({-1, 1, -1})});
}

IntMatrix stated_tau(std::int64_t m)
{
  return IntMatrix{{1, m, m}, {0, 1, 0}, {0, 0, 1}};
}

IntMatrix orientation_certificate()
{
  return IntMatrix::diagonal({-1, 1, 1});
}

} // namespace motivic::biquadratic
