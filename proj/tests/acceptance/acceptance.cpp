// One line per acceptance criterion, exact equality throughout.
//
// Exit status is 0 when every criterion passes except the two whose stated
// values are refuted by the engine (7 and 8); those must fail with exactly
// the recorded counterexample, so any other outcome still exits 1.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "motivic/biquadratic.hpp"
#include "motivic/torus.hpp"

namespace
{

using namespace motivic;

struct Outcome
{
  bool pass = true;
  std::string detail;
  bool known_deviation = false; // failed exactly as recorded
};

struct Criterion
{
  int id;
  std::string title;
  std::function<Outcome()> run;
};

ContextPtr biq()
{ return GaloisContext::biquadratic(); }

ArtinPolynomial lab(GaloisContext const &ctx, std::string const &name)
{ return ArtinPolynomial::constant(ctx.parse_element("[" + name + "]")); }

// Every listed assertion must exist and pass.
bool require(ScenarioReport const &r, std::vector<std::string> const &names, std::string &why)
{
  for (auto const &n : names) {
    bool found = false;
    for (auto const &a : r.assertions) {
      if (a.name != n)
        continue;
      found = true;
      if (a.verdict != Verdict::Pass) {
        why += r.id + ": '" + n + "' is " + std::string(verdict_name(a.verdict)) + "; ";
        return false;
      }
    }
    if (!found) {
      why += r.id + ": missing '" + n + "'; ";
      return false;
    }
  }
  return true;
}

Outcome quadratic_formulas()
{
  Outcome o;
  int checked = 0;
  for (auto const &ctx_ptr : {biq(), GaloisContext::quadratic()}) {
    auto const &ctx = *ctx_ptr;
    auto const &g = ctx.group();
    auto l = ArtinPolynomial::lefschetz(g);
    auto one = ArtinPolynomial::integer(g, 1);
    for (auto const &c : g->subgroup_classes()) {
      if (2 * c.order != g->order())
        continue;
      GSet s = GSet::cosets(g, c.representative);
      auto e = lab(ctx, ctx.label(g->class_of(c.representative)));
      bool qs = quasi_split_class(s) == (l - one) * (l - e + one);
      bool p1 = weil_restriction_p1_class(s) == l * l + e * l + one;
      if (!qs || !p1)
        o.detail += ctx.label(g->class_of(c.representative)) + (qs ? " p1 " : " qs ") + "mismatch; ";
      o.pass = o.pass && qs && p1;
      ++checked;
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " quadratic sets, both formulas";
  return o;
}

Outcome bg_route()
{
  Outcome o;
  auto r = run_scenario("thm15", biq(), {});
  o.pass = require(r,
                   {"{G'} by the G_m-torsor over R1_E1 x R1_E2 against (L - 1)(L - [E1] + 1)(L - [E2] + 1)",
                    "{G'} by the resolution 1 -> G_m -> R_E -> G' -> 1 against the same product", "{BG}{G'} = 1"},
                   o.detail);
  // independent: the class read off the resolution of X(G')
  auto const &ctx = *biq();
  auto l = ArtinPolynomial::lefschetz(ctx.group());
  auto one = ArtinPolynomial::integer(ctx.group(), 1);
  auto direct = torus_class(biquadratic::sum_zero(ctx), ctx, "G'");
  bool same = *direct.polynomial == (l - one) * (l - lab(ctx, "E1") + one) * (l - lab(ctx, "E2") + one);
  if (!same)
    o.detail += "torus_class(X(G')) differs; ";
  o.pass = o.pass && same;
  if (o.pass)
    o.detail = "{G'} = (L - 1)(L - [E1] + 1)(L - [E2] + 1) by both routes, {BG}{G'} = 1";
  return o;
}

Outcome g_route()
{
  Outcome o;
  auto const &ctx = *biq();
  auto const &g = ctx.group();
  auto l = ArtinPolynomial::lefschetz(g);
  auto one = ArtinPolynomial::integer(g, 1);
  auto rk = quasi_split_class(GSet::regular(g));
  auto d1 = divide_monic(rk, l - lab(ctx, "E12") + one);
  auto d2 = divide_monic(d1.quotient, l - one);
  bool exact = d1.remainder.is_zero_polynomial() && d2.remainder.is_zero_polynomial();
  auto const &t = d2.quotient;
  bool lcoef = t.coefficient(1) == ctx.parse_element("[E12] - [K]");
  auto report = run_scenario("lemma-t", biq(), {});
  bool flagged = false;
  for (auto const &a : report.assertions)
    if (a.name == "coefficient of L^0 in {T} against the stated formula")
      flagged = (t.coefficient(0) == ctx.parse_element("1")) ? a.verdict == Verdict::Pass
                                                              : a.verdict == Verdict::Discrepancy;
  bool no_fail = report.count(Verdict::Fail) == 0;
  o.pass = exact && lcoef && flagged && no_fail;
  o.detail = "{T} = " + t.format(ctx) + "; constant " + ctx.format(t.coefficient(0)) +
             (t.coefficient(0) == ctx.parse_element("1") ? " as stated" : " reported as a discrepancy against 1");
  if (!exact)
    o.detail += "; division not exact";
  if (!lcoef)
    o.detail += "; L-coefficient is " + ctx.format(t.coefficient(1));
  if (!flagged || !no_fail)
    o.detail += "; lemma-t verdicts wrong";
  return o;
}

Outcome bg_not_inverse()
{
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    ScenarioParams p;
    p.r = r;
    auto rep = run_scenario("thm15", biq(), p);
    std::string h = "{B(G x G_m^" + std::to_string(r) + ")} != {G x G_m^" + std::to_string(r) + "}^-1";
    o.pass = require(rep,
                     {"{BG} != {G}^-1", "{BG} != {G}^-1: witness coefficient", "{BG} != {G}^-1: witness marks", h,
                      h + ": witness coefficient", h + ": witness marks"},
                     o.detail) &&
             o.pass;
  }
  if (o.pass)
    o.detail = "UNEQUAL, witness 2 + [K] - [E1] - [E2] - [E12] with marks (0,0,0,0,2); also for r = 1, 2, 3";
  return o;
}

Outcome lambda_coefficient()
{
  auto const &ctx = *biq();
  auto c = quasi_split_class(GSet::regular(ctx.group())).coefficient(3);
  Outcome o;
  o.pass = c == ctx.parse_element("-[K]");
  o.detail = "L^3-coefficient of {R_K} is " + ctx.format(c);
  return o;
}

Outcome ba_not_one()
{
  Outcome o;
  for (std::int64_t m = 1; m <= 3; ++m) {
    ScenarioParams p;
    p.m = m;
    auto rep = run_scenario("thm16", biq(), p);
    bool all = rep.count(Verdict::Fail) == 0 && rep.count(Verdict::Discrepancy) == 0;
    if (!all)
      o.detail += "m=" + std::to_string(m) + " has non-passing assertions; ";
    o.pass = all &&
             require(rep,
                     {"exact: 0 -> N' -> N -> Z -> 0", "tau conjugates the stated matrices to diag(-1,-1,1), diag(-1,1,-1)",
                      "{BA} = {BG}^-1 {G}^-1", "{BA} != 1", "{BA} != 1: witness marks"},
                     o.detail) &&
             o.pass;
  }
  if (o.pass)
    o.detail = "m = 1, 2, 3: sequences exact, tau certificates pass, {BA} = {BG}^-1{G}^-1 and {BA} != 1 at (0,0,0,0,2)";
  return o;
}

Outcome remark()
{
  Outcome o;
  auto rep = run_scenario("remark", biq(), {});
  std::set<std::string> failed;
  bool witness_ok = true;
  std::size_t seen = 0;
  for (auto const &a : rep.assertions) {
    bool is_ba = a.name.starts_with("{BA} = 1") || a.name.starts_with("{BA'} = 1");
    if (!is_ba)
      continue;
    ++seen;
    if (a.verdict == Verdict::Pass)
      continue;
    auto tag = a.name.substr(a.name.rfind('['));
    failed.insert(a.name.substr(0, a.name.find(' ', 1)) + " " + tag);
    witness_ok = witness_ok && a.witness.find("marks (0,0,0,0,2)") != std::string::npos;
  }
  o.pass = failed.empty() && seen == 18;
  if (o.pass) {
    o.detail = "all 18 classes equal 1";
    return o;
  }
  std::set<std::string> recorded = {"{BA'} [coset:E1+coset:E2, n=2]", "{BA'} [coset:E1+coset:E2, n=4]"};
  o.known_deviation = failed == recorded && witness_ok && seen == 18;
  for (auto const &f : failed)
    o.detail += f + " != 1; ";
  o.detail += "difference has marks (0,0,0,0,2): for L = E1 x E2 and even n the character lattice of T/G_m is not "
              "that of R_L/G_m, and {T/G_m} = {G}";
  return o;
}

Outcome charpoly()
{
  Outcome o;
  std::size_t checks = 0;
  auto scan = [&](ScenarioReport const &r) {
    for (auto const &a : r.assertions) {
      if (!a.name.starts_with("charpoly oracle"))
        continue;
      ++checks;
      if (a.verdict != Verdict::Pass) {
        o.pass = false;
        o.detail += r.id + ": " + a.name + "; ";
      }
    }
  };
  for (auto const &id : {"basics", "lemma-t", "remark"})
    scan(run_scenario(id, biq(), {}));
  scan(run_scenario("basics", GaloisContext::quadratic(), {}));
  for (int r = 1; r <= 3; ++r) {
    ScenarioParams p;
    p.r = r;
    scan(run_scenario("thm15", biq(), p));
  }
  for (std::int64_t m = 1; m <= 3; ++m) {
    ScenarioParams p;
    p.m = m;
    scan(run_scenario("thm16", biq(), p));
  }

  // direct, against the cofactor determinant
  auto const &ctx = *biq();
  auto const &g = *ctx.group();
  auto lg = biquadratic::character_lattice_G(ctx);
  auto lgp = biquadratic::sum_zero(ctx);
  auto cg = *torus_class(lg, ctx, "G").polynomial;
  auto cgp = *torus_class(lgp, ctx, "G'").polynomial;
  IntPoly stated = IntPoly({-1, 1}) * IntPoly({-1, 0, 1});
  std::vector<std::string> off;
  for (int e = 0; e < static_cast<int>(g.order()); ++e) {
    bool a = cyclic_specialization(cg, e) == oracle::det_charpoly(lg.element_action(e));
    bool b = cyclic_specialization(cgp, e) == oracle::det_charpoly(lgp.element_action(e));
    checks += 2;
    if (!a || !b) {
      o.pass = false;
      o.detail += "direct check fails at element " + std::to_string(e) + "; ";
    }
    if (e != 0 && (cyclic_specialization(cg, e) != stated || cyclic_specialization(cgp, e) != stated))
      off.push_back("Gal(K/" + ctx.label(g.class_of(g.cyclic(e))) + ") gives " +
                    cyclic_specialization(cg, e).to_string());
  }
  bool oracle_ok = o.pass;
  o.pass = oracle_ok && off.empty();
  if (o.pass) {
    o.detail = std::to_string(checks) + " oracle checks";
    return o;
  }
  if (!oracle_ok)
    return o;
  o.known_deviation = off == std::vector<std::string>{"Gal(K/E12) gives q^3 + q^2 - q - 1"};
  o.detail = std::to_string(checks) + " oracle checks pass and {G}, {G'} agree at every element, but (q - 1)(q^2 - 1) "
             "is not the common value: ";
  for (auto const &s : off)
    o.detail += s + " = (q + 1)(q^2 - 1)";
  return o;
}

Outcome burnside()
{
  Outcome o;
  std::size_t checks = 0;
  auto fail = [&](std::string const &what) {
    o.pass = false;
    o.detail += what + "; ";
  };
  auto const &ctx = *biq();
  auto const &gp = ctx.group();
  auto const &g = *gp;

  std::vector<GSet> transitive;
  for (auto const &c : g.subgroup_classes())
    transitive.push_back(GSet::cosets(gp, c.representative));
  std::vector<std::vector<BurnsideElement>> table(transitive.size());
  for (std::size_t i = 0; i < transitive.size(); ++i)
    for (std::size_t j = 0; j < transitive.size(); ++j) {
      auto brute = oracle::orbit_class(oracle::product_set(transitive[i], transitive[j]));
      table[i].push_back(brute);
      ++checks;
      if (burnside_normal_form(transitive[i]) * burnside_normal_form(transitive[j]) != brute)
        fail("product " + std::to_string(i) + "x" + std::to_string(j));
    }

  for (auto const &s : oracle::small_gsets(gp, 8)) {
    auto m = marks(burnside_normal_form(s));
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      ++checks;
      if (m.values[c] != oracle::fixed_points(s, g.subgroup_classes()[c].representative))
        fail("marks of a " + std::to_string(s.size()) + "-point set");
    }
  }

  for (auto const &c : g.subgroup_classes()) {
    GroupPtr h = g.subgroup(c.representative);
    for (auto const &k : h->subgroup_classes()) {
      GSet local = GSet::cosets(h, k.representative);
      ++checks;
      if (induce(burnside_normal_form(local)) != oracle::orbit_class(oracle::induced_set(local)))
        fail("induction");
    }
  }

  std::mt19937_64 rng(oracle::seed());
  std::vector<std::pair<MarkVector, BurnsideElement>> seen;
  for (int n = 0; n < 200; ++n) {
    auto a = oracle::random_element(gp, rng);
    auto b = oracle::random_element(gp, rng);
    BurnsideElement brute(gp);
    for (auto [i, x] : a.terms())
      for (auto [j, y] : b.terms()) {
        auto t = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        t *= x * y;
        brute += t;
      }
    checks += 2;
    if (a * b != brute)
      fail("random product");
    auto ma = marks(a), mb = marks(b), mab = marks(a * b);
    for (std::size_t c = 0; c < ma.values.size(); ++c)
      if (mab.values[c] != ma.values[c] * mb.values[c])
        fail("marks not multiplicative");
    seen.emplace_back(ma, a);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t j = i + 1; j < seen.size(); ++j)
      if ((seen[i].first == seen[j].first) != (seen[i].second == seen[j].second))
        fail("mark map not injective on normal forms");
  std::vector<std::vector<std::int64_t>> mt = g.mark_table();
  if (oracle::det(mt) == 0)
    fail("singular table of marks");
  if (o.pass)
    o.detail = std::to_string(checks) + " brute-force checks, seed " + std::to_string(oracle::seed());
  return o;
}

} // namespace

int main()
{
  std::vector<Criterion> criteria = {
      {1, "quadratic formulas", quadratic_formulas},
      {2, "{BG} route", bg_route},
      {3, "{G} route", g_route},
      {4, "{BG} != {G}^-1", bg_not_inverse},
      {5, "L^3-coefficient of {R_K}", lambda_coefficient},
      {6, "{BA} != 1 for the 2m-torsion", ba_not_one},
      {7, "{BA} = {BA'} = 1 for n-torsion of R_L and R1_L", remark},
      {8, "charpoly oracle", charpoly},
      {9, "Burnside oracle", burnside},
  };
  auto start = std::chrono::steady_clock::now();
  int passed = 0, known = 0, unexpected = 0;
  for (auto const &c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    }
    catch (std::exception const &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << o.detail
         << ")";
    if (!o.pass)
      line << (o.known_deviation ? " [known deviation]" : " [unexpected]");
    line << "  " << static_cast<int>(ms) << " ms";
    std::cout << line.str() << "\n";
    if (o.pass)
      ++passed;
    else if (o.known_deviation)
      ++known;
    else
      ++unexpected;
  }
  double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << passed << " pass, " << known << " fail as recorded, " << unexpected << " fail unexpectedly; "
            << static_cast<int>(total) << " ms\n";
  return unexpected == 0 ? 0 : 1;
}
