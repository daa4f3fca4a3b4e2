#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "motivic/biquadratic.hpp"
#include "motivic/error.hpp"
#include "motivic/lattice.hpp"

using namespace motivic;

namespace
{

IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, int span)
{
  std::uniform_int_distribution<int> d(-span, span);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = d(rng);
  return m;
}

} // namespace

TEST_CASE("Smith invariants agree with determinantal divisors (seeded)")
{
  std::mt19937_64 rng(oracle::seed());
  std::uniform_int_distribution<int> dim(1, 4);
  for (int n = 0; n < 300; ++n) {
    auto m = random_matrix(rng, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)), 6);
    CAPTURE(n);
    auto s = smith_invariants(m);
    auto o = oracle::smith_by_minors(m);
    std::vector<std::int64_t> nonzero;
    for (auto x : s)
      if (x != 0)
        nonzero.push_back(x < 0 ? -x : x);
    CHECK(nonzero == o);
    CHECK(rank(m) == o.size());
  }
}

TEST_CASE("determinant and characteristic polynomial agree with cofactor expansion (seeded)")
{
  std::mt19937_64 rng(oracle::seed() + 1);
  for (int n = 0; n < 200; ++n) {
    std::size_t k = 1 + static_cast<std::size_t>(n % 4);
    auto m = random_matrix(rng, k, k, 5);
    CHECK(determinant(m) == oracle::det(m.to_rows()));
    CHECK(characteristic_polynomial(m) == oracle::det_charpoly(m));
  }
}

TEST_CASE("integer kernel")
{
  std::mt19937_64 rng(oracle::seed() + 2);
  for (int n = 0; n < 100; ++n) {
    auto m = random_matrix(rng, 2, 4, 4);
    auto k = integer_kernel(m);
    CHECK((m * k).is_zero());
    CHECK(k.cols() == 4 - rank(m));
    // saturated: the kernel basis has trivial elementary divisors
    for (auto x : smith_invariants(k))
      CHECK((x == 1 || x == -1));
  }
}

TEST_CASE("unimodular inverse")
{
  IntMatrix a{{2, 1}, {1, 1}};
  auto inv = inverse_unimodular(a);
  REQUIRE(inv);
  CHECK(a * *inv == IntMatrix::identity(2));
  CHECK_FALSE(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("lattice construction checks group relations")
{
  auto g = GaloisContext::biquadratic()->group();
  // σ1 must square to the identity
  CHECK_THROWS_AS(GaloisLattice::make(g, "bad", {IntMatrix{{0, -1}, {1, 0}}, IntMatrix::identity(2)}), Error);
  CHECK_THROWS_AS(GaloisLattice::make(g, "bad", {IntMatrix{{2}}, IntMatrix{{1}}}), Error);
  CHECK_NOTHROW(GaloisLattice::make(g, "ok", {IntMatrix{{-1}}, IntMatrix{{1}}}));
}

TEST_CASE("equivariance of lattice maps")
{
  auto ctx = GaloisContext::biquadratic();
  auto s = ctx->parse_gset("coset:E1");
  auto zs = GaloisLattice::permutation(s, "Z[E1]");
  auto z = GaloisLattice::trivial(ctx->group(), 1);
  CHECK_NOTHROW(LatticeMap::make(zs, z, IntMatrix{{1, 1}}));
  CHECK_THROWS_AS(LatticeMap::make(zs, z, IntMatrix{{1, 0}}), Error);
  CHECK_THROWS_AS(LatticeMap::make(zs, z, IntMatrix{{1, 1, 1}}), Error);
}

TEST_CASE("exact sequences")
{
  auto ctx = GaloisContext::biquadratic();
  auto s = ctx->parse_gset("coset:E1");
  auto zs = GaloisLattice::permutation(s, "Z[E1]");
  auto aug = GaloisLattice::augmentation_kernel(s, "I");
  auto z = GaloisLattice::trivial(ctx->group(), 1);
  auto inc = LatticeMap::make(aug, zs, IntMatrix{{1}, {-1}});
  auto sum = LatticeMap::make(zs, z, IntMatrix{{1, 1}});
  CHECK(verify_exact_sequence({inc, sum}).pass);
  auto twice = LatticeMap::make(zs, z, IntMatrix{{2, 2}});
  auto v = verify_exact_sequence({inc, twice});
  CHECK_FALSE(v.pass); // not surjective
  CHECK(verify_exact_sequence({biquadratic::inclusion_T(*ctx), biquadratic::pi_G(*ctx)}).pass);
}

TEST_CASE("kernel mod n has index n^rank for the identity")
{
  auto ctx = GaloisContext::biquadratic();
  auto zs = GaloisLattice::permutation(ctx->parse_gset("regular"), "Z[K]");
  for (std::int64_t n = 1; n <= 5; ++n) {
    auto k = kernel_mod_n(LatticeMap::identity(zs), n);
    CHECK(k.index == n * n * n * n);
    CHECK(k.image_order == k.index);
  }
  CHECK_THROWS_AS(kernel_mod_n(LatticeMap::identity(zs), 0), Error);
}

TEST_CASE("iso certificates")
{
  auto ctx = GaloisContext::biquadratic();
  auto s = ctx->parse_gset("coset:E12");
  auto quot = GaloisLattice::norm_quotient(s, "Z[S]/Z");
  auto aug = GaloisLattice::augmentation_kernel(s, "I");
  auto tau = find_iso_certificate(quot, aug);
  REQUIRE(tau);
  CHECK(check_iso_certificate(quot, aug, *tau).pass);
  // the sign lattice is not the trivial one
  auto z = GaloisLattice::trivial(ctx->group(), 1);
  CHECK_FALSE(find_iso_certificate(quot, z));
  CHECK_FALSE(check_iso_certificate(quot, z, IntMatrix{{1}}).pass);
  CHECK_THROWS_AS(check_iso_certificate(quot, z, IntMatrix{{0}}), Error);
}

TEST_CASE("duals and the two tori of the biquadratic setup")
{
  auto ctx = GaloisContext::biquadratic();
  auto g = biquadratic::character_lattice_G(*ctx);
  auto gp = biquadratic::sum_zero(*ctx);
  auto tau = find_iso_certificate(dual_lattice(gp), g);
  REQUIRE(tau);
  CHECK(check_iso_certificate(dual_lattice(gp), g, *tau).pass);
  // G and G' have different classes, so no certificate can exist
  CHECK_FALSE(find_iso_certificate(g, gp, 2));
}

TEST_CASE("Hom basis elements are equivariant")
{
  auto ctx = GaloisContext::biquadratic();
  auto a = biquadratic::character_lattice_G(*ctx);
  auto b = GaloisLattice::permutation(ctx->parse_gset("regular"), "Z[K]");
  auto basis = hom_basis(a, b);
  CHECK(basis.cols() > 0);
  for (std::size_t v = 0; v < basis.cols(); ++v) {
    auto x = hom_element(basis, v, b.rank(), a.rank());
    CHECK_NOTHROW(LatticeMap::make(a, b, x));
  }
}

TEST_CASE("permutation bases")
{
  auto ctx = GaloisContext::biquadratic();
  auto quot = GaloisLattice::norm_quotient(ctx->parse_gset("coset:E1"), "R1");
  auto p = find_permutation_basis(quot);
  CHECK(p.status != SearchStatus::Found); // rank 1 sign lattice
  auto zs = GaloisLattice::permutation(ctx->parse_gset("coset:E1+point"), "Z");
  auto q = find_permutation_basis(zs);
  REQUIRE(q.status == SearchStatus::Found);
  CHECK(burnside_normal_form(*q.gset) == ctx->parse_element("[E1] + 1"));
}

TEST_CASE("lattice specs")
{
  auto ctx = GaloisContext::biquadratic();
  CHECK(ctx->parse_lattice("perm:regular").rank() == 4);
  CHECK(ctx->parse_lattice("aug:coset:E1+coset:E2").rank() == 3);
  CHECK(ctx->parse_lattice("quot:regular").rank() == 3);
  auto j = ctx->parse_lattice(R"({"action":[[[-1]],[[1]]]})");
  CHECK(j.rank() == 1);
  CHECK_THROWS_AS(ctx->parse_lattice(R"({"action":[[[-1]]]})"), Error);
  CHECK_THROWS_AS(ctx->parse_lattice("{"), Error);
}
