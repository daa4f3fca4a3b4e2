#include <doctest.h>

#include "../oracles.hpp"
#include "motivic/biquadratic.hpp"
#include "motivic/error.hpp"
#include "motivic/torus.hpp"

using namespace motivic;

TEST_CASE("quasi-split and P^1 classes count points under every Frobenius")
{
  for (auto const &ctx : {GaloisContext::biquadratic(), GaloisContext::quadratic()}) {
    auto const &g = *ctx->group();
    for (auto const &s : oracle::small_gsets(ctx->group(), 6)) {
      auto qs = quasi_split_class(s);
      auto p1 = weil_restriction_p1_class(s);
      CHECK(qs.is_monic());
      CHECK(qs.degree() == s.size());
      for (int e = 0; e < static_cast<int>(g.order()); ++e) {
        CHECK(cyclic_specialization(qs, e) == oracle::frobenius_count(s, e, -1));
        CHECK(cyclic_specialization(p1, e) == oracle::frobenius_count(s, e, 1));
      }
    }
  }
}

TEST_CASE("quasi-split classes of larger unions count points under every Frobenius")
{
  auto ctx = GaloisContext::biquadratic();
  auto const &g = *ctx->group();
  for (auto spec : {"regular+regular", "regular+regular+regular", "2*coset:E1+coset:E2+2*coset:E12+point"}) {
    CAPTURE(spec);
    auto s = ctx->parse_gset(spec);
    auto qs = quasi_split_class(s);
    CHECK(qs.degree() == s.size());
    for (int e = 0; e < static_cast<int>(g.order()); ++e)
      CHECK(cyclic_specialization(qs, e) == oracle::frobenius_count(s, e, -1));
  }
}

TEST_CASE("the regular class")
{
  auto ctx = GaloisContext::biquadratic();
  CHECK(quasi_split_class(GSet::regular(ctx->group())).format(*ctx) ==
        "L^4 - [K]*L^3 + (3*[K] - [E1] - [E2] - [E12])*L^2 - [K]*L - 1 - [K] + [E1] + [E2] + [E12]");
}

TEST_CASE("norm-one quadratic tori")
{
  auto ctx = GaloisContext::biquadratic();
  auto const &g = *ctx->group();
  for (auto const &c : g.subgroup_classes()) {
    if (2 * c.order != g.order())
      continue;
    auto r = norm_one_quadratic_class(*ctx, c.representative);
    auto e = ArtinPolynomial::constant(BurnsideElement::basis(ctx->group(), g.class_of(c.representative)));
    CHECK(*r.polynomial == ArtinPolynomial::lefschetz(ctx->group()) - e + ArtinPolynomial::integer(ctx->group(), 1));
    CHECK(r.trace.axioms().empty());
    CHECK_FALSE(r.trace.steps().empty());
  }
  CHECK_THROWS_AS(norm_one_quadratic_class(*ctx, g.trivial_mask()), Error);
}

TEST_CASE("torus classes from lattices satisfy the charpoly oracle")
{
  auto ctx = GaloisContext::biquadratic();
  std::vector<GaloisLattice> lattices = {biquadratic::character_lattice_G(*ctx), biquadratic::sum_zero(*ctx),
                                         biquadratic::character_lattice_T(*ctx),
                                         ctx->parse_lattice("aug:coset:E12"), ctx->parse_lattice("perm:regular")};
  for (auto const &l : lattices) {
    CAPTURE(l.name());
    auto r = torus_class(l, *ctx, "X");
    REQUIRE(r.polynomial);
    CHECK(r.polynomial->degree() == static_cast<int>(l.rank()));
    for (int e = 0; e < static_cast<int>(ctx->group()->order()); ++e)
      CHECK(cyclic_specialization(*r.polynomial, e) == oracle::det_charpoly(l.element_action(e)));
  }
}

TEST_CASE("the biquadratic norm-one torus has no quasi-split resolution")
{
  // it is not stably rational, so no sequence of permutation lattices can resolve it
  auto ctx = GaloisContext::biquadratic();
  try {
    torus_class(ctx->parse_lattice("quot:regular"), *ctx, "X");
    FAIL("expected NotQuasiSplit");
  }
  catch (Error const &e) {
    CHECK(e.code() == Errc::NotQuasiSplit);
  }
}

TEST_CASE("quasi-split resolutions are exact and certified")
{
  auto ctx = GaloisContext::biquadratic();
  auto res = find_quasi_split_resolution(biquadratic::character_lattice_G(*ctx));
  REQUIRE(res);
  CHECK(verify_exact_sequence(res->maps).pass);
  CHECK(res->maps[0].source().rank() + res->kernel.gset.size() == static_cast<std::size_t>(res->middle.gset.size()));
}

TEST_CASE("a wrong resolution is rejected")
{
  auto ctx = GaloisContext::biquadratic();
  auto const &g = ctx->group();
  auto s = ctx->parse_gset("coset:E1");
  auto zs = GaloisLattice::permutation(s, "Z[E1]");
  auto aug = GaloisLattice::augmentation_kernel(s, "I");
  auto z = GaloisLattice::trivial(g, 1);
  SpecialRegistry reg(g);
  auto inc = LatticeMap::make(aug, zs, IntMatrix{{1}, {-1}});
  auto twice = LatticeMap::make(zs, z, IntMatrix{{2, 2}});
  CHECK_THROWS_AS(class_and_Bdual_from_resolution({inc, twice}, std::nullopt, std::nullopt, reg, *ctx,
                                                  {"T", "T2", "T1", "B"}),
                  Error);
}

TEST_CASE("charpoly oracle on the rank-2 torus T")
{
  auto ctx = GaloisContext::biquadratic();
  auto g = exact_divide(quasi_split_class(GSet::regular(ctx->group())),
                        ArtinPolynomial::lefschetz(ctx->group()) -
                            ArtinPolynomial::constant(ctx->parse_element("[E12]")) +
                            ArtinPolynomial::integer(ctx->group(), 1));
  auto t = exact_divide(g, ArtinPolynomial::lefschetz(ctx->group()) - ArtinPolynomial::integer(ctx->group(), 1));
  for (auto const &c : charpoly_oracle(t, biquadratic::character_lattice_T(*ctx)))
    CHECK(c.pass);
  // the stated action matrices give an isomorphic lattice
  auto tau = find_iso_certificate(biquadratic::character_lattice_T(*ctx), biquadratic::stated_T(*ctx));
  CHECK(tau.has_value());
}
