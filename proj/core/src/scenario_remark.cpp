#include <numeric>

#include "motivic/error.hpp"
#include "scenario_common.hpp"

namespace motivic
{

using detail::Recorder;

namespace
{

void remark_case(Recorder &rec, RemarkCase const &c)
{
  auto const &ctx = rec.ctx();
  auto const &g = ctx.group();
  if (c.n < 1)
    throw Error(Errc::UnsupportedParameter, "n must be positive");
  auto s = ctx.parse_gset(c.algebra);
  if (s.size() < 1)
    throw Error(Errc::UnsupportedParameter, "the algebra must be nonzero");
  auto d = static_cast<std::size_t>(s.size());
  std::string tag = "[" + c.algebra + ", n=" + std::to_string(c.n) + "]";

  SpecialRegistry registry(g);
  register_standard_specials(registry, ctx);
  auto const &rl = registry.add(quasi_split_special("R_L" + tag, s));
  auto unit = StackClass::one(g);
  auto zs = GaloisLattice::permutation(s, "Z[L]");

  // A = R_L[n]: the n-th power map
  auto power = kernel_mod_n(LatticeMap::identity(zs), c.n, "X(R_L/A)");
  auto power_seq = certify_sequence(power, c.n);
  bool quotient_qs = find_iso_certificate(power.kernel, zs, 1).has_value();
  ClassResult quotient;
  quotient.name = "R_L/A" + tag;
  quotient.polynomial = rl.polynomial;
  quotient.stably_rational = {Rationality::Yes, "quasi-split torus"};
  quotient.trace.add({"lattice-iso",
                      {},
                      {{"X(R_L/A) = nZ[L] is isomorphic to Z[L]", quotient_qs}},
                      quotient.name,
                      rl.polynomial.format(ctx),
                      Justification::Verified,
                      {}});
  auto ba = bn_from_special_sequence(power_seq, rl, quotient, registry, ctx, "BA" + tag);
  rec.absorb(ba);
  rec.equality("{BA} = 1 for A = R_L[n] " + tag, *ba.stack, unit, true, registry);

  // A' = R1_L[n] and T = R_L/A'
  IntMatrix proj(d - 1, d);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    proj(i, i) = 1;
    proj(i, d - 1) = -1;
  }
  auto to_norm = LatticeMap::make(zs, GaloisLattice::norm_quotient(s, "X(R1_L)"), proj);
  auto xt = kernel_mod_n(to_norm, c.n, "X(T)");
  auto t_seq = certify_sequence(xt, c.n);

  IntMatrix aug(1, xt.kernel.rank());
  std::int64_t content = 0;
  for (std::size_t j = 0; j < xt.kernel.rank(); ++j) {
    for (std::size_t i = 0; i < d; ++i)
      aug(0, j) += xt.inclusion.matrix()(i, j);
    content = std::gcd(content, aug(0, j));
  }
  for (std::size_t j = 0; j < xt.kernel.rank(); ++j)
    aug(0, j) /= content;
  IntMatrix w_basis = integer_kernel(aug);
  auto w = xt.kernel.sublattice(w_basis, "X(T/G_m)");
  auto w_incl = LatticeMap::make(w, xt.kernel, w_basis);
  auto to_z = LatticeMap::make(xt.kernel, GaloisLattice::trivial(g, 1), aug);

  auto i_lattice = GaloisLattice::augmentation_kernel(s, "X(R_L/G_m)");
  auto tau = find_iso_certificate(w, i_lattice);
  rec.record("X(T/G_m) = X(R_L/G_m) " + tag, tau ? "isomorphic (certificate)" : "no certificate found");

  std::vector<LatticeMap> maps;
  std::optional<QuasiSplitFlank> middle, kernel;
  if (tau) {
    IntMatrix i_basis(d, d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      i_basis(i, i) = 1;
      i_basis(d - 1, i) = -1;
    }
    IntMatrix ones(1, d);
    for (std::size_t i = 0; i < d; ++i)
      ones(0, i) = 1;
    maps = {LatticeMap::make(w, zs, i_basis * *inverse_unimodular(*tau)),
            LatticeMap::make(zs, GaloisLattice::trivial(g, 1), ones)};
    middle = QuasiSplitFlank{s, IntMatrix::identity(d)};
    kernel = QuasiSplitFlank{GSet::points(g, 1), IntMatrix{{1}}};
  }
  else if (auto found = find_quasi_split_resolution(w, 3)) {
    maps = found->maps;
    middle = found->middle;
    kernel = found->kernel;
  }
  else {
    rec.check("quasi-split resolution of X(T/G_m) " + tag, false, "found", "none within the search bound");
    return;
  }
  rec.record("resolution of T/G_m " + tag,
             ctx.format(burnside_normal_form(middle->gset)) + " -> " + ctx.format(burnside_normal_form(kernel->gset)));

  auto res = class_and_Bdual_from_resolution(maps, middle, kernel, registry, ctx,
                                             {"T/G_m" + tag, "P2" + tag, "P1" + tag, "B(T/G_m)^dual" + tag});
  if (!res.torus.polynomial) {
    rec.check("{T/G_m} is a polynomial " + tag, false, "polynomial", res.torus.stack->format(ctx));
    return;
  }
  auto t = gm_torsor_factor({w_incl, to_z}, res.torus, ctx, "T" + tag);
  auto ba2 = bn_from_special_sequence(t_seq, rl, t, registry, ctx, "BA'" + tag);
  rec.absorb(res.torus);
  rec.absorb(t);
  rec.absorb(ba2);

  rec.compare("{T} = {R_L} (stated intermediate step) " + tag, *t.polynomial, rl.polynomial, true);
  rec.equality("{BA'} = 1 for A' = R1_L[n] " + tag, *ba2.stack, unit, true, registry);

  rec.charpoly("T" + tag, *t.polynomial, xt.kernel);
  rec.charpoly("T/G_m" + tag, *res.torus.polynomial, w);
}

} // namespace

ScenarioReport scenario_remark_torsion(ContextPtr const &ctx_ptr, std::vector<RemarkCase> const &cases)
{
  Recorder rec("remark", ctx_ptr);
  std::string list;
  for (auto const &c : cases)
    list += (list.empty() ? "" : "; ") + c.algebra + " n=" + std::to_string(c.n);
  rec.param("cases", list);
  for (auto const &c : cases)
    remark_case(rec, c);
  return rec.finish();
}

} // namespace motivic
