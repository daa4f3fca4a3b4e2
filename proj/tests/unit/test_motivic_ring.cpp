#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "motivic/biquadratic.hpp"
#include "motivic/error.hpp"
#include "motivic/stack_class.hpp"
#include "motivic/torus.hpp"

using namespace motivic;

namespace
{

ArtinPolynomial random_poly(GroupPtr const &g, std::mt19937_64 &rng, int degree)
{
  std::vector<BurnsideElement> c;
  for (int k = 0; k <= degree; ++k)
    c.push_back(oracle::random_element(g, rng, 2));
  return ArtinPolynomial(g, c);
}

ArtinPolynomial random_monic(GroupPtr const &g, std::mt19937_64 &rng, int degree)
{
  return random_poly(g, rng, degree - 1) + ArtinPolynomial::lefschetz(g, static_cast<std::size_t>(degree));
}

struct Setup
{
  ContextPtr ctx = GaloisContext::biquadratic();
  GroupPtr g = ctx->group();
  ArtinPolynomial l = ArtinPolynomial::lefschetz(g);
  ArtinPolynomial one = ArtinPolynomial::integer(g, 1);

  ArtinPolynomial e(std::string const &name) const
  { return ArtinPolynomial::constant(ctx->parse_element("[" + name + "]")); }
};

} // namespace

TEST_CASE("polynomial ring axioms (seeded)")
{
  Setup s;
  std::mt19937_64 rng(oracle::seed());
  for (int n = 0; n < 50; ++n) {
    auto a = random_poly(s.g, rng, 3), b = random_poly(s.g, rng, 2), c = random_poly(s.g, rng, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == ArtinPolynomial(s.g));
    CHECK((a * b).degree() <= a.degree() + b.degree());
  }
}

TEST_CASE("specialization is a ring homomorphism")
{
  Setup s;
  std::mt19937_64 rng(oracle::seed() + 3);
  for (int n = 0; n < 50; ++n) {
    auto a = random_poly(s.g, rng, 2), b = random_poly(s.g, rng, 2);
    for (std::size_t c = 0; c < s.g->class_count(); ++c)
      CHECK(mark_specialization(a * b, static_cast<int>(c)) ==
            mark_specialization(a, static_cast<int>(c)) * mark_specialization(b, static_cast<int>(c)));
  }
}

TEST_CASE("monic division round-trips (seeded)")
{
  Setup s;
  std::mt19937_64 rng(oracle::seed() + 4);
  for (int n = 0; n < 100; ++n) {
    auto d = random_monic(s.g, rng, 1 + n % 3);
    auto q = random_poly(s.g, rng, 2);
    auto r = d.degree() > 1 ? random_poly(s.g, rng, d.degree() - 1) : random_poly(s.g, rng, 0);
    auto res = divide_monic(q * d + r, d);
    CHECK(res.quotient == q);
    CHECK(res.remainder == r);
    CHECK(exact_divide(q * d, d) == q);
  }
}

TEST_CASE("inexact division throws with the remainder")
{
  Setup s;
  CHECK_THROWS_AS(exact_divide(s.l * s.l + s.one, s.l - s.one), Error);
  try {
    exact_divide(s.l * s.l + s.one, s.l - s.one);
  }
  catch (Error const &e) {
    CHECK(e.code() == Errc::NotDivisible);
  }
  CHECK_THROWS_AS(divide_monic(s.l, s.l + s.l), Error); // 2L is not monic
}

TEST_CASE("format")
{
  Setup s;
  CHECK((s.l * s.l + s.e("E12") * s.l + s.one).format(*s.ctx) == "L^2 + [E12]*L + 1");
  CHECK(ArtinPolynomial(s.g).format(*s.ctx) == "0");
  CHECK((s.l - s.one).format(*s.ctx) == "L - 1");
}

TEST_CASE("zero test reports the top nonzero coefficient and its marks")
{
  Setup s;
  auto w = s.ctx->parse_element("2+[K]-[E1]-[E2]-[E12]");
  auto p = ArtinPolynomial::monomial(w, 2) + s.l;
  auto z = is_zero(p, *s.ctx);
  CHECK_FALSE(z.zero);
  CHECK(z.witness_degree == 2);
  CHECK(*z.witness == w);
  CHECK(z.witness_marks->to_string() == "(0,0,0,0,2)");
  CHECK(z.scope == ZeroScope::Ambient);
  CHECK(is_zero(ArtinPolynomial(s.g), *s.ctx).zero);
}

TEST_CASE("disabling an axiom downgrades the scope")
{
  auto ctx = GaloisContext::from_json(R"({"group":{"degree":4,"generators":[[1,0,2,3],[0,1,3,2]],"names":["s1","s2"]},
    "labels":[{"stabilizer":["s1"],"name":"E1"},{"stabilizer":["s2"],"name":"E2"},{"stabilizer":["s1*s2"],"name":"E12"}],
    "axioms":{"A1":false}})");
  CHECK_FALSE(ctx->axioms_enabled());
  auto z = is_zero(ArtinPolynomial::lefschetz(ctx->group()), *ctx);
  CHECK(z.scope == ZeroScope::ModelOnly);
}

TEST_CASE("registry rejects non-monic and uncertified entries")
{
  Setup s;
  SpecialRegistry reg(s.g);
  CHECK_THROWS_AS(reg.add({"bad", s.l + s.l, SpecialKind::Lefschetz, std::nullopt}), Error);
  CHECK_THROWS_AS(reg.add({"bad", s.l - s.one, SpecialKind::QuasiSplit, std::nullopt}), Error);
  register_standard_specials(reg, *s.ctx);
  CHECK_THROWS_AS(reg.get("nope"), Error);
  CHECK(reg.get("G_m").polynomial == s.l - s.one);
}

TEST_CASE("stack classes: inverses and cross-multiplied equality")
{
  Setup s;
  SpecialRegistry reg(s.g);
  register_standard_specials(reg, *s.ctx);
  auto const &gm = reg.get("G_m");
  auto const &rk = reg.get("R_K");
  auto x = StackClass::from_special(rk).over(gm);
  auto unit = StackClass::one(s.g);
  CHECK(stack_equal(x * x.inverse(), unit, *s.ctx, reg).equal);
  CHECK_FALSE(stack_equal(x, unit, *s.ctx, reg).equal);
  CHECK_THROWS_AS(StackClass::from_polynomial(s.l + s.one).inverse(), Error);
  // (L − 1)·{R_K}/(L − 1) is the polynomial {R_K}
  auto y = StackClass::from_special(gm) * x;
  REQUIRE(y.as_polynomial());
  CHECK(*y.as_polynomial() == rk.polynomial);
}

namespace
{

// {BG}·{G} − 1 after clearing the denominator R_E of {BG} = G_m/R_E.
ZeroVerdict bg_times_g(Setup const &s, ArtinPolynomial const &g_class)
{
  SpecialRegistry reg(s.g);
  register_standard_specials(reg, *s.ctx);
  auto const &re = reg.add(quasi_split_special("R_E", biquadratic::index_set(*s.ctx)));
  auto bg = StackClass::from_special(reg.get("G_m")).over(re);
  return stack_equal(bg * StackClass::from_polynomial(g_class), StackClass::one(s.g), *s.ctx, reg).zero;
}

ArtinPolynomial class_of_g(Setup const &s)
{
  return exact_divide(quasi_split_class(GSet::regular(s.g)), s.l - s.e("E12") + s.one);
}

} // namespace

TEST_CASE("the leading witness survives perturbing the constant term of {T}")
{
  Setup s;
  auto g = class_of_g(s);
  auto t = exact_divide(g, s.l - s.one);
  auto base = bg_times_g(s, g);
  REQUIRE_FALSE(base.zero);
  auto shift = ArtinPolynomial::constant(s.ctx->parse_element("[K]-[E1]-[E2]"));
  for (int k = -5; k <= 5; ++k) {
    CAPTURE(k);
    auto tk = t + ArtinPolynomial::integer(s.g, k) * shift;
    auto v = bg_times_g(s, (s.l - s.one) * tk);
    REQUIRE_FALSE(v.zero);
    CHECK(v.witness_degree == base.witness_degree);
    CHECK(*v.witness == *base.witness);
    CHECK(*v.witness_marks == *base.witness_marks);
  }
}

TEST_CASE("a corruption by the witness is invisible to cyclic marks but not to the zero test")
{
  Setup s;
  auto g = class_of_g(s);
  auto lattice = biquadratic::character_lattice_G(*s.ctx);
  for (auto const &c : charpoly_oracle(g, lattice))
    CHECK(c.pass);

  auto w = s.ctx->parse_element("2+[K]-[E1]-[E2]-[E12]");
  for (std::size_t k = 0; k <= 3; ++k) {
    auto corrupted = g + ArtinPolynomial::monomial(w, k);
    for (auto const &c : charpoly_oracle(corrupted, lattice))
      CHECK(c.pass); // same cyclic specializations
    CHECK_FALSE(is_zero(corrupted - g, *s.ctx).zero);
  }

  // a corruption visible at some cyclic subgroup is caught by the oracle
  auto visible = g + ArtinPolynomial::monomial(s.ctx->parse_element("[E1]"), 1);
  bool caught = false;
  for (auto const &c : charpoly_oracle(visible, lattice))
    caught = caught || !c.pass;
  CHECK(caught);
}
