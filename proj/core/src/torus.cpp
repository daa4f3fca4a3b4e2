#include "motivic/torus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "motivic/error.hpp"

namespace motivic
{

namespace
{

using RawPoly = std::vector<std::vector<std::pair<int, std::int64_t>>>;

std::mutex cache_mutex;
std::map<std::string, RawPoly> qs_cache;

std::string cache_key(GSet const &s)
{
  std::string key = s.group()->fingerprint() + "|";
  BurnsideElement nf = burnside_normal_form(s);
  for (auto const &[cls, c] : nf.terms())
    key += std::to_string(cls) + ":" + std::to_string(c) + ",";
  return key;
}

RawPoly to_raw(ArtinPolynomial const &p)
{
  RawPoly raw;
  for (auto const &c : p.coefficients())
    raw.emplace_back(c.terms().begin(), c.terms().end());
  return raw;
}

ArtinPolynomial from_raw(GroupPtr const &g, RawPoly const &raw)
{
  std::vector<BurnsideElement> coeffs;
  for (auto const &terms : raw) {
    BurnsideElement c(g);
    for (auto const &[cls, n] : terms)
      c += BurnsideElement::basis(g, cls, n);
    coeffs.push_back(std::move(c));
  }
  return ArtinPolynomial(g, std::move(coeffs));
}

using Subset = std::uint32_t;

Subset act_on_subset(GSet const &s, int element, Subset mask)
{
  Subset out = 0;
  for (int x = 0; x < s.size(); ++x)
    if (mask & (Subset{1} << x))
      out |= Subset{1} << s.act(element, x);
  return out;
}

struct SubsetOrbit
{
  Subset representative;
  ElementMask stabilizer;
};

/// Orbit representatives (the smallest mask in each orbit) of all subsets.
std::vector<SubsetOrbit> subset_orbits(GSet const &s)
{
  if (s.size() > 16)
    throw Error(Errc::UnsupportedParameter, "Γ-sets larger than 16 points are not supported");
  auto const &g = *s.group();
  std::vector<SubsetOrbit> out;
  Subset total = Subset{1} << s.size();
  for (Subset mask = 0; mask < total; ++mask) {
    bool minimal = true;
    ElementMask stab = 0;
    for (int e = 0; e < static_cast<int>(g.order()); ++e) {
      Subset img = act_on_subset(s, e, mask);
      if (img < mask) {
        minimal = false;
        break;
      }
      if (img == mask)
        stab |= ElementMask{1} << e;
    }
    if (minimal)
      out.push_back({mask, stab});
  }
  return out;
}

std::vector<int> points_of(Subset mask)
{
  std::vector<int> pts;
  for (int x = 0; mask; ++x, mask >>= 1)
    if (mask & 1)
      pts.push_back(x);
  return pts;
}

std::string label_list(GaloisContext const &ctx, GSet const &s)
{
  return ctx.format(burnside_normal_form(s));
}

} // namespace

ArtinPolynomial quasi_split_class(GSet const &s)
{
  auto const &g = s.group();
  std::string key = cache_key(s);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = qs_cache.find(key); it != qs_cache.end())
      return from_raw(g, it->second);
  }

  // R_{X+Y} = R_X x R_Y, so only transitive sets go through the subset strata.
  auto orbits = orbit_decompose(s);
  if (orbits.size() > 1) {
    ArtinPolynomial product = ArtinPolynomial::integer(g, 1);
    for (auto const &o : orbits)
      product = product * quasi_split_class(s.restrict_points(o.points, g));
    std::lock_guard lock(cache_mutex);
    qs_cache.emplace(key, to_raw(product));
    return product;
  }

  auto n = static_cast<std::size_t>(s.size());
  ArtinPolynomial result = ArtinPolynomial::lefschetz(g, n);
  Subset full = (Subset{1} << n) - 1;
  for (auto const &orbit : subset_orbits(s)) {
    if (orbit.representative == full)
      continue;
    if (orbit.representative == 0) {
      result -= ArtinPolynomial::integer(g, 1);
      continue;
    }
    GroupPtr h = g->subgroup(orbit.stabilizer);
    GSet piece = s.restrict_points(points_of(orbit.representative), h);
    result -= induce(quasi_split_class(piece));
  }

  std::lock_guard lock(cache_mutex);
  qs_cache.emplace(key, to_raw(result));
  return result;
}

ArtinPolynomial weil_restriction_p1_class(GSet const &s)
{
  auto const &g = s.group();
  ArtinPolynomial result(g);
  for (auto const &orbit : subset_orbits(s)) {
    int cls = g->class_of(orbit.stabilizer);
    auto k = static_cast<std::size_t>(std::popcount(orbit.representative));
    result += ArtinPolynomial::monomial(BurnsideElement::basis(g, cls), k);
  }
  return result;
}

SpecialEntry quasi_split_special(std::string name, GSet const &s)
{
  return SpecialEntry{std::move(name), quasi_split_class(s), SpecialKind::QuasiSplit, s};
}

SpecialEntry lefschetz_special(GroupPtr group)
{
  return SpecialEntry{"L", ArtinPolynomial::lefschetz(group), SpecialKind::Lefschetz, std::nullopt};
}

void register_standard_specials(SpecialRegistry &registry, GaloisContext const &ctx)
{
  auto const &g = ctx.group();
  registry.add(quasi_split_special("G_m", GSet::points(g, 1)));
  registry.add(lefschetz_special(g));
  for (int cls = 0; cls < g->full_class(); ++cls)
    registry.add(quasi_split_special(
      "R_" + ctx.label(cls), GSet::cosets(g, g->subgroup_classes()[static_cast<std::size_t>(cls)].representative)));
}

// ---------------------------------------------------------------------------

ArtinPolynomial twist_of_induced_strata(GSet const &strata, std::vector<ArtinPolynomial> const &payload)
{
  auto orbits = orbit_decompose(strata);
  if (payload.size() != orbits.size())
    throw Error(Errc::BadPayload, "expected " + std::to_string(orbits.size()) + " payloads, got " +
                                    std::to_string(payload.size()));
  auto const &g = strata.group();
  ArtinPolynomial out(g);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    GroupPtr h = g->subgroup(orbits[i].stabilizer);
    if (!payload[i].group()->same_as(*h))
      throw Error(Errc::BadPayload, "payload " + std::to_string(i) + " does not live over the stabilizer of orbit " +
                                      std::to_string(i));
    out += induce(payload[i]);
  }
  return out;
}

ClassResult fixed_point_untwist(GroupPtr group, InvolutionStratum const &stratum, std::string name)
{
  if (stratum.shape != StratumShape::ProjectiveLine)
    throw Error(Errc::RuleScopeError, "untwisting applies to forms of P^1 only");
  if (!stratum.rational_fixed_point)
    throw Error(Errc::RuleScopeError, "untwisting needs a rational fixed point");
  auto cls = ArtinPolynomial::lefschetz(group) + ArtinPolynomial::integer(group, 1);
  ClassResult r;
  r.name = std::move(name);
  r.polynomial = cls;
  r.stably_rational = {Rationality::Yes, "isomorphic to P^1"};
  DerivationStep step{"pointed-conic-untwist", {}, {}, r.name, cls.to_string(), Justification::Verified, {}};
  if (stratum.inversion) {
    step.justification = Justification::Axiom;
    step.axioms = {axioms::pointed_conic};
  }
  else
    step.side_conditions.push_back({"action is trivial, so the form is split", true});
  r.trace.add(std::move(step));
  return r;
}

// ---------------------------------------------------------------------------

SequenceCertificate certify_sequence(ExactnessVerdict const &v, GaloisLattice const &middle)
{
  return {v.pass, v.description, middle};
}

SequenceCertificate certify_sequence(ModKernel const &k, std::int64_t n)
{
  bool ok = k.index == k.image_order;
  std::string d = "0 -> " + k.kernel.name() + " -> " + k.inclusion.target().name() + " -> (image mod " +
                  std::to_string(n) + ", order " + std::to_string(k.image_order) + ") -> 0, index " +
                  std::to_string(k.index);
  return {ok, d, k.inclusion.target()};
}

ClassResult bn_from_special_sequence(SequenceCertificate const &seq, SpecialEntry const &middle,
                                     ClassResult const &quotient, SpecialRegistry const &registry,
                                     GaloisContext const &ctx, std::string name)
{
  if (!seq.verified)
    throw Error(Errc::BadSequence, "sequence not verified: " + seq.description);
  if (!registry.contains(middle))
    throw Error(Errc::NotSpecial, "'" + middle.name + "' is not a registered special group");
  if (middle.kind != SpecialKind::QuasiSplit || !middle.certificate)
    throw Error(Errc::NotSpecial, "'" + middle.name + "' has no quasi-split certificate");
  auto perm = GaloisLattice::permutation(*middle.certificate, middle.name);
  if (perm.rank() != seq.middle.rank() || !find_iso_certificate(seq.middle, perm))
    throw Error(Errc::NotSpecial, "certificate of '" + middle.name + "' does not match " + seq.middle.name());

  StackClass q = quotient.stack ? *quotient.stack : StackClass::from_polynomial(*quotient.polynomial);
  ClassResult r;
  r.name = std::move(name);
  r.stack = q.over(middle);
  r.polynomial = r.stack->as_polynomial();
  r.trace = quotient.trace;
  r.trace.given(middle.name, middle.polynomial.format(ctx));
  if (!r.trace.knows(quotient.name))
    r.trace.given(quotient.name, q.format(ctx));
  r.trace.add({"special-middle-quotient",
               {quotient.name, middle.name},
               {{"exact: " + seq.description, true},
                {middle.name + " is quasi-split, hence special", true},
                {"character lattice of " + middle.name + " is Z[S] for its certificate S", true}},
               r.name,
               r.stack->format(ctx),
               Justification::Verified,
               {}});
  return r;
}

namespace
{

GSet certify_flank(GaloisLattice const &l, std::optional<QuasiSplitFlank> const &cert)
{
  if (cert) {
    auto perm = GaloisLattice::permutation(cert->gset, "Z[S]");
    IsoVerdict v = check_iso_certificate(l, perm, cert->basis);
    if (!v.pass)
      throw Error(Errc::NotQuasiSplit, l.name() + ": certificate rejected (" + v.reason + ")");
    return cert->gset;
  }
  auto found = find_permutation_basis(l);
  if (found.status != SearchStatus::Found)
    throw Error(Errc::NotQuasiSplit, l.name() + " has no certified permutation basis: " + found.reason);
  return *found.gset;
}

} // namespace

ResolutionResult class_and_Bdual_from_resolution(std::vector<LatticeMap> const &maps,
                                                 std::optional<QuasiSplitFlank> const &middle,
                                                 std::optional<QuasiSplitFlank> const &kernel,
                                                 SpecialRegistry &registry, GaloisContext const &ctx,
                                                 ResolutionNames const &names)
{
  if (maps.size() != 2)
    throw Error(Errc::BadSequence, "a resolution needs exactly two lattice maps");
  ExactnessVerdict v = verify_exact_sequence(maps);
  if (!v.pass)
    throw Error(Errc::BadSequence, v.description + " fails at " + v.failed_node + ": " + v.reason);

  GSet s2 = certify_flank(maps[1].source(), middle);
  GSet s1 = certify_flank(maps[1].target(), kernel);
  auto const &g = ctx.group();

  Trace trace;
  StackClass t = StackClass::one(g), bdual = StackClass::one(g);
  if (s2.size() > 0) {
    auto const &e = registry.add(quasi_split_special(names.middle, s2));
    trace.given(names.middle, e.polynomial.format(ctx));
    t = t * StackClass::from_special(e);
    bdual = bdual.over(e);
  }
  else
    trace.given(names.middle, "1");
  if (s1.size() > 0) {
    auto const &e = registry.add(quasi_split_special(names.kernel, s1));
    trace.given(names.kernel, e.polynomial.format(ctx));
    t = t.over(e);
    bdual = bdual * StackClass::from_special(e);
  }
  else
    trace.given(names.kernel, "1");

  std::vector<SideCondition> checks = {
    {"exact: " + v.description, true},
    {maps[1].source().name() + " is the permutation lattice of S = " + label_list(ctx, s2), true},
    {maps[1].target().name() + " is the permutation lattice of S = " + label_list(ctx, s1), true},
  };

  ResolutionResult out;
  out.torus.name = names.torus;
  out.torus.stack = t;
  out.torus.polynomial = t.as_polynomial();
  auto torus_checks = checks;
  if (out.torus.polynomial)
    torus_checks.push_back(
      {"quotient times " + names.kernel + " reproduces " + names.middle,
       *out.torus.polynomial * t.denominator_polynomial() == t.numerator_polynomial()});
  out.torus.trace = trace;
  out.torus.trace.add({"quasi-split-resolution",
                       {names.middle, names.kernel},
                       torus_checks,
                       names.torus,
                       out.torus.polynomial ? out.torus.polynomial->format(ctx) : t.format(ctx),
                       Justification::Verified,
                       {}});

  out.dual_classifying.name = names.dual_classifying;
  out.dual_classifying.stack = bdual;
  out.dual_classifying.polynomial = bdual.as_polynomial();
  out.dual_classifying.stably_rational = {Rationality::Yes,
                                          "classifying stack of the dual of a torus with a quasi-split resolution"};
  out.dual_classifying.trace = trace;
  out.dual_classifying.trace.add({"quasi-split-resolution-dual",
                                  {names.kernel, names.middle},
                                  checks,
                                  names.dual_classifying,
                                  bdual.format(ctx),
                                  Justification::Verified,
                                  {}});
  return out;
}

namespace
{

std::vector<std::int64_t> permutation_character(GSet const &s)
{
  std::vector<std::int64_t> chi(s.group()->order(), 0);
  for (int e = 0; e < static_cast<int>(chi.size()); ++e)
    for (int x = 0; x < s.size(); ++x)
      if (s.act(e, x) == x)
        ++chi[static_cast<std::size_t>(e)];
  return chi;
}

std::vector<std::int64_t> lattice_character(GaloisLattice const &l)
{
  std::vector<std::int64_t> chi(l.group()->order(), 0);
  for (int e = 0; e < static_cast<int>(chi.size()); ++e)
    for (std::size_t i = 0; i < l.rank(); ++i)
      chi[static_cast<std::size_t>(e)] += l.element_action(e)(i, i);
  return chi;
}

// Every Γ-set of exactly `size` points, as unions of the transitive sets in `pieces`.
void gsets_of_size(std::vector<GSet> const &pieces, std::size_t from, int size, GSet const &acc,
                   std::vector<GSet> &out)
{
  if (size == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < pieces.size(); ++i)
    if (pieces[i].size() <= size)
      gsets_of_size(pieces, i, size - pieces[i].size(), acc.disjoint_union(pieces[i]), out);
}

bool all_units(std::vector<std::int64_t> const &inv, std::size_t rank)
{
  if (inv.size() != rank)
    return false;
  for (auto d : inv)
    if (d != 1)
      return false;
  return true;
}

} // namespace

std::optional<QuasiSplitResolution> find_quasi_split_resolution(GaloisLattice const &l, int max_kernel_points,
                                                                std::size_t budget)
{
  auto const &g = l.group();
  std::vector<GSet> pieces;
  for (auto const &c : g->subgroup_classes())
    pieces.push_back(GSet::cosets(g, c.representative));
  auto chi_l = lattice_character(l);
  auto empty = GSet::points(g, 0);
  std::size_t spent = 0;

  for (int k = 0; k <= max_kernel_points; ++k) {
    std::vector<GSet> kernels;
    gsets_of_size(pieces, 0, k, empty, kernels);
    for (auto const &s1 : kernels) {
      auto chi1 = permutation_character(s1);
      std::vector<GSet> middles;
      gsets_of_size(pieces, 0, static_cast<int>(l.rank()) + k, empty, middles);
      for (auto const &s2 : middles) {
        auto chi2 = permutation_character(s2);
        bool match = true;
        for (std::size_t e = 0; e < chi2.size(); ++e)
          match = match && chi2[e] == chi_l[e] + chi1[e];
        if (!match)
          continue;

        auto p2 = GaloisLattice::permutation(s2, "Z[S2]");
        auto p1 = GaloisLattice::permutation(s1, "Z[S1]");
        auto make = [&](IntMatrix const &inc, IntMatrix const &proj) {
          return QuasiSplitResolution{{s2, IntMatrix::identity(p2.rank())},
                                      {s1, IntMatrix::identity(p1.rank())},
                                      {LatticeMap::make(l, p2, inc), LatticeMap::make(p2, p1, proj)}};
        };
        if (k == 0) {
          ++spent;
          if (auto tau = find_iso_certificate(p2, l, 1))
            return make(*tau, IntMatrix(0, p2.rank()));
          continue;
        }

        IntMatrix hom = hom_basis(p2, p1);
        std::size_t dim = hom.cols();
        std::vector<IntMatrix> basis;
        for (std::size_t v = 0; v < dim; ++v)
          basis.push_back(hom_element(hom, v, p1.rank(), p2.rank()));
        // coefficients in {-1, 0, 1}, first nonzero one positive
        std::vector<int> c(dim, -1);
        while (spent < budget) {
          std::size_t j = 0;
          while (j < dim && c[j] == 1)
            c[j++] = -1;
          if (j == dim)
            break;
          ++c[j];
          auto lead = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
          if (lead == c.end() || *lead < 0)
            continue;
          ++spent;
          IntMatrix f(p1.rank(), p2.rank());
          for (std::size_t v = 0; v < dim; ++v)
            if (c[v] != 0)
              f = f + std::int64_t{c[v]} * basis[v];
          if (!all_units(smith_invariants(f), p1.rank()))
            continue;
          IntMatrix ker = integer_kernel(f);
          auto sub = p2.sublattice(ker, "ker");
          if (auto tau = find_iso_certificate(sub, l, 1))
            return make(ker * *tau, f);
        }
        if (spent >= budget)
          return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

ClassResult torus_class(GaloisLattice const &l, GaloisContext const &ctx, std::string name)
{
  auto found = find_permutation_basis(l);
  if (found.status == SearchStatus::Found) {
    ClassResult r;
    r.name = std::move(name);
    r.polynomial = quasi_split_class(*found.gset);
    r.stack = StackClass::from_polynomial(*r.polynomial);
    r.stably_rational = {Rationality::Yes, "quasi-split torus"};
    r.trace.add({"quasi-split",
                 {},
                 {{l.name() + " has a permuted basis (certificate checked)", true}},
                 r.name,
                 r.polynomial->format(ctx),
                 Justification::Verified,
                 {}});
    return r;
  }
  auto res = find_quasi_split_resolution(l, 3);
  if (!res)
    throw Error(Errc::NotQuasiSplit, l.name() + ": no quasi-split resolution within the search bound");
  SpecialRegistry local(ctx.group());
  register_standard_specials(local, ctx);
  return class_and_Bdual_from_resolution(res->maps, res->middle, res->kernel, local, ctx,
                                         {name, "T2(" + name + ")", "T1(" + name + ")", "B(" + name + "^dual)"})
      .torus;
}

ClassResult gm_torsor_factor(std::vector<LatticeMap> const &maps, ClassResult const &base,
                             GaloisContext const &ctx, std::string name)
{
  if (maps.size() != 2)
    throw Error(Errc::BadSequence, "a G_m-extension needs exactly two lattice maps");
  ExactnessVerdict v = verify_exact_sequence(maps);
  if (!v.pass)
    throw Error(Errc::BadSequence, v.description + " fails at " + v.failed_node + ": " + v.reason);
  auto const &z = maps[1].target();
  if (!z.same_action(GaloisLattice::trivial(z.group(), 1)))
    throw Error(Errc::BadSequence, "kernel torus " + z.name() + " is not G_m");
  if (!base.polynomial)
    throw Error(Errc::BadSequence, "base class of " + name + " is not a polynomial");

  auto const &g = ctx.group();
  ArtinPolynomial gm = ArtinPolynomial::lefschetz(g) - ArtinPolynomial::integer(g, 1);
  ClassResult r;
  r.name = std::move(name);
  r.polynomial = gm * *base.polynomial;
  r.stack = StackClass::from_polynomial(*r.polynomial);
  if (base.stably_rational.value == Rationality::Yes)
    r.stably_rational = {Rationality::Yes, "G_m-torsor over " + base.name + ", which is stably rational"};
  r.trace = base.trace;
  if (!r.trace.knows(base.name))
    r.trace.given(base.name, base.polynomial->format(ctx));
  r.trace.add({"gm-torsor",
               {base.name},
               {{"exact: " + v.description, true}, {"kernel lattice " + z.name() + " is trivial of rank 1", true}},
               r.name,
               r.polynomial->format(ctx),
               Justification::Verified,
               {}});
  return r;
}

ClassResult norm_one_quadratic_class(GaloisContext const &ctx, ElementMask h)
{
  auto const &g = ctx.group();
  if (!g->is_subgroup(h) || 2 * static_cast<std::size_t>(std::popcount(h)) != g->order())
    throw Error(Errc::NotQuadratic, "norm-one torus needs a subgroup of index 2");
  std::string lab = ctx.label(g->class_of(h));
  GSet s = GSet::cosets(g, h);

  auto zs = GaloisLattice::permutation(s, "Z[" + lab + "]");
  auto aug = GaloisLattice::augmentation_kernel(s, "X(R_" + lab + "/G_m)");
  auto z = GaloisLattice::trivial(g, 1);
  auto inc = LatticeMap::make(aug, zs, IntMatrix{{1}, {-1}});
  auto sum = LatticeMap::make(zs, z, IntMatrix{{1, 1}});

  SpecialRegistry local(g);
  auto res = class_and_Bdual_from_resolution({inc, sum}, QuasiSplitFlank{s, IntMatrix::identity(2)},
                                             QuasiSplitFlank{GSet::points(g, 1), IntMatrix{{1}}}, local, ctx,
                                             {"R_" + lab + "/G_m", "R_" + lab, "G_m", "B(R1_" + lab + ")"});

  auto norm = GaloisLattice::norm_quotient(s, "X(R1_" + lab + ")");
  auto tau = find_iso_certificate(norm, aug);
  bool iso = tau && check_iso_certificate(norm, aug, *tau).pass;

  ClassResult r;
  r.name = "R1_" + lab;
  r.polynomial = res.torus.polynomial;
  r.stack = res.torus.stack;
  r.stably_rational = {Rationality::Yes, "open subset of a conic with a rational point"};
  r.trace = res.torus.trace;
  r.trace.add({"norm-one-is-quotient",
               {res.torus.name},
               {{"X(R1_" + lab + ") = Z[" + lab + "]/Z(1,1) is isomorphic to ker(aug) = X(R_" + lab + "/G_m)", iso}},
               r.name,
               r.polynomial->format(ctx),
               Justification::Verified,
               {}});
  return r;
}

std::vector<CharpolyCheck> charpoly_oracle(ArtinPolynomial const &cls, GaloisLattice const &lattice)
{
  if (!cls.group()->same_as(*lattice.group()))
    throw Error(Errc::MixedGroups, "class and lattice over different groups");
  std::vector<CharpolyCheck> out;
  for (int e = 0; e < static_cast<int>(cls.group()->order()); ++e) {
    IntPoly spec = cyclic_specialization(cls, e);
    IntPoly chi = characteristic_polynomial(lattice.element_action(e));
    out.push_back({e, spec, chi, spec == chi});
  }
  return out;
}

} // namespace motivic
