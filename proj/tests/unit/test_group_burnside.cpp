#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "motivic/context.hpp"
#include "motivic/error.hpp"

using namespace motivic;

namespace
{

GroupPtr c2c2()
{ return GaloisContext::biquadratic()->group(); }

GroupPtr s3()
{ return PermGroup::generate(3, {{1, 0, 2}, {1, 2, 0}}); }

GroupPtr d4()
{ return PermGroup::generate(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

} // namespace

TEST_CASE("group enumeration")
{
  CHECK(c2c2()->order() == 4);
  CHECK(c2c2()->class_count() == 5);
  CHECK(s3()->order() == 6);
  CHECK(s3()->class_count() == 4);
  CHECK(d4()->order() == 8);
  CHECK(d4()->class_count() == 8);
  auto g = c2c2();
  for (int e = 0; e < 4; ++e)
    CHECK(g->multiply(e, g->inverse(e)) == 0);
  CHECK(g->class_of(g->trivial_mask()) == g->trivial_class());
  CHECK(g->class_of(g->full_mask()) == g->full_class());
}

TEST_CASE("a non-permutation generator is rejected")
{
  CHECK_THROWS_AS(PermGroup::generate(3, {{0, 0, 1}}), Error);
}

TEST_CASE("table of marks matches fixed-point counts")
{
  for (auto const &g : {c2c2(), s3(), d4()}) {
    auto const &table = g->mark_table();
    auto const &classes = g->subgroup_classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      GSet s = GSet::cosets(g, classes[i].representative);
      for (std::size_t j = 0; j < classes.size(); ++j)
        CHECK(table[j][i] == oracle::fixed_points(s, classes[j].representative));
    }
    CHECK(oracle::det(table) != 0);
  }
}

TEST_CASE("products of transitive sets agree with orbit enumeration")
{
  for (auto const &g : {c2c2(), s3(), d4()}) {
    auto const &classes = g->subgroup_classes();
    for (auto const &a : classes)
      for (auto const &b : classes) {
        GSet x = GSet::cosets(g, a.representative), y = GSet::cosets(g, b.representative);
        CHECK(burnside_normal_form(x) * burnside_normal_form(y) == oracle::orbit_class(oracle::product_set(x, y)));
        CHECK(burnside_normal_form(x.product(y)) == oracle::orbit_class(oracle::product_set(x, y)));
      }
  }
}

TEST_CASE("normal form and marks of small G-sets")
{
  for (auto const &g : {c2c2(), s3()}) {
    for (auto const &s : oracle::small_gsets(g, 7)) {
      auto nf = burnside_normal_form(s);
      CHECK(nf == oracle::orbit_class(s));
      auto m = marks(nf);
      for (std::size_t c = 0; c < g->class_count(); ++c)
        CHECK(m.values[c] == oracle::fixed_points(s, g->subgroup_classes()[c].representative));
    }
  }
}

TEST_CASE("induction agrees with the brute-force induced set")
{
  for (auto const &g : {c2c2(), s3(), d4()}) {
    for (auto const &c : g->subgroup_classes()) {
      GroupPtr h = g->subgroup(c.representative);
      for (auto const &k : h->subgroup_classes()) {
        GSet local = GSet::cosets(h, k.representative);
        CHECK(induce(burnside_normal_form(local)) == oracle::orbit_class(oracle::induced_set(local)));
      }
    }
  }
}

TEST_CASE("marks are a ring homomorphism and injective (seeded)")
{
  auto seed = oracle::seed();
  CAPTURE(seed);
  std::mt19937_64 rng(seed);
  for (auto const &g : {c2c2(), s3()}) {
    std::vector<std::pair<MarkVector, BurnsideElement>> seen;
    for (int n = 0; n < 200; ++n) {
      auto a = oracle::random_element(g, rng), b = oracle::random_element(g, rng);
      auto ma = marks(a), mb = marks(b);
      auto mab = marks(a * b), msum = marks(a + b);
      for (std::size_t c = 0; c < ma.values.size(); ++c) {
        CHECK(mab.values[c] == ma.values[c] * mb.values[c]);
        CHECK(msum.values[c] == ma.values[c] + mb.values[c]);
      }
      CHECK(a * b == b * a);
      seen.emplace_back(ma, a);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      for (std::size_t j = i + 1; j < seen.size(); ++j)
        CHECK((seen[i].first == seen[j].first) == (seen[i].second == seen[j].second));
  }
}

TEST_CASE("element text round-trips")
{
  auto ctx = GaloisContext::biquadratic();
  std::mt19937_64 rng(oracle::seed());
  for (int n = 0; n < 100; ++n) {
    auto a = oracle::random_element(ctx->group(), rng);
    CHECK(ctx->parse_element(ctx->format(a)) == a);
  }
  CHECK(ctx->format(ctx->parse_element("2+[K]-[E1]-[E2]-[E12]")) == "2 + [K] - [E1] - [E2] - [E12]");
  CHECK(marks(ctx->parse_element("2+[K]-[E1]-[E2]-[E12]")).to_string() == "(0,0,0,0,2)");
  CHECK(ctx->format(ctx->parse_element("[E1]") * ctx->parse_element("[E2]")) == "[K]");
  CHECK(ctx->format(ctx->parse_element("[E1]") * ctx->parse_element("[E1]")) == "2*[E1]");
  CHECK_THROWS_AS(ctx->parse_element("[E7]"), Error);
  CHECK_THROWS_AS(ctx->parse_element("2+"), Error);
}

TEST_CASE("G-set specs")
{
  auto ctx = GaloisContext::biquadratic();
  CHECK(ctx->parse_gset("regular").size() == 4);
  CHECK(ctx->parse_gset("coset:E1 + coset:E2").size() == 4);
  CHECK(ctx->parse_gset("2*coset:E12+point").size() == 5);
  CHECK(burnside_normal_form(ctx->parse_gset("split:3")) == BurnsideElement::integer(ctx->group(), 3));
  CHECK_THROWS_AS(ctx->parse_gset("coset:X"), Error);
  CHECK_THROWS_AS(ctx->parse_gset(""), Error);
  auto j = ctx->gset_from_json(R"({"transitive":[{"stabilizer":["s1"]},{"stabilizer":["s1*s2"]}]})");
  CHECK(j.size() == 4);
  CHECK(orbit_decompose(j).size() == 2);
}

TEST_CASE("mixed groups are rejected")
{
  auto a = BurnsideElement::integer(c2c2(), 1);
  auto b = BurnsideElement::integer(s3(), 1);
  CHECK_THROWS_AS(a * b, Error);
}
