#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motivic/biquadratic.hpp"
#include "motivic/context.hpp"
#include "motivic/error.hpp"
#include "motivic/scenarios.hpp"
#include "motivic/torus.hpp"

namespace
{

using namespace motivic;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ContextPtr load_context(std::string const &path)
{
  if (path.empty() || path == "biquadratic")
    return GaloisContext::biquadratic();
  if (path == "quadratic")
    return GaloisContext::quadratic();
  try {
    return GaloisContext::from_json(read_file(path));
  }
  catch (Error const &e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

GaloisLattice lattice_arg(GaloisContext const &ctx, std::string const &arg)
{
  using namespace biquadratic;
  if (arg == "G")
    return character_lattice_G(ctx);
  if (arg == "G'")
    return sum_zero(ctx);
  if (arg == "T")
    return character_lattice_T(ctx);
  if (arg.starts_with("perm:") || arg.starts_with("aug:") || arg.starts_with("quot:") || arg.starts_with("{"))
    return ctx.parse_lattice(arg);
  return ctx.parse_lattice(read_file(arg));
}

GSet gset_arg(GaloisContext const &ctx, std::string const &arg)
{
  if (!arg.empty() && arg.front() == '{')
    return ctx.gset_from_json(arg);
  return ctx.parse_gset(arg);
}

struct Options
{
  std::string context;
  std::int64_t m = 1;
  int r = 2;
  bool json = false;
  std::string out;
  bool strict = false;
  std::uint64_t seed = default_seed;
  std::vector<std::string> gsets;
  std::vector<std::int64_t> ns;
  std::vector<std::string> elems;
  std::string lattice;
};

void emit(Options const &o, std::string const &text)
{
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f)
    throw Error(Errc::InvalidInput, "cannot write '" + o.out + "'");
  f << text;
}

int cmd_check(std::string const &id, Options const &o)
{
  auto const &ids = scenario_ids();
  if (id != "all" && std::find(ids.begin(), ids.end(), id) == ids.end())
    throw Error(Errc::InvalidInput, "unknown scenario '" + id + "'");
  ContextPtr ctx = load_context(o.context);

  ScenarioParams params;
  params.m = o.m;
  params.r = o.r;
  params.seed = o.seed;
  if (!o.gsets.empty() || !o.ns.empty()) {
    std::vector<std::string> algebras = o.gsets;
    if (algebras.empty())
      for (auto const &c : default_remark_cases())
        if (std::find(algebras.begin(), algebras.end(), c.algebra) == algebras.end())
          algebras.push_back(c.algebra);
    std::vector<std::int64_t> ns = o.ns.empty() ? std::vector<std::int64_t>{2, 3, 4} : o.ns;
    params.remark.clear();
    for (auto const &a : algebras)
      for (auto n : ns)
        params.remark.push_back({a, n});
  }

  std::vector<std::string> run = id == "all" ? ids : std::vector<std::string>{id};
  // Scenarios share only immutable data and a locked cache.
  std::map<std::string, std::future<ScenarioReport>> pending;
  for (auto const &s : run)
    pending.emplace(s, std::async(std::launch::async, [s, ctx, params] { return run_scenario(s, ctx, params); }));
  std::vector<ScenarioReport> reports;
  for (auto &[name, f] : pending)
    reports.push_back(f.get());

  bool ok = true;
  for (auto const &r : reports)
    ok = ok && r.ok(o.strict);

  std::string text;
  if (o.json) {
    if (id == "all") {
      auto arr = nlohmann::json::array();
      for (auto const &r : reports)
        arr.push_back(nlohmann::json::parse(render_json(r)));
      text = arr.dump(2) + "\n";
    }
    else
      text = render_json(reports.front()) + "\n";
  }
  else {
    for (auto const &r : reports)
      text += (text.empty() ? "" : "\n") + render_text(r);
  }
  emit(o, text);
  return ok ? exit_ok : exit_failed;
}

int cmd_compute(std::string const &kind, Options const &o)
{
  static std::vector<std::string> const kinds = {"qs-class", "p1-class", "marks", "burnside-mul", "torus-class"};
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw Error(Errc::InvalidInput, "unknown compute kind '" + kind + "'");
  ContextPtr ctx = load_context(o.context);

  auto need = [](bool have, std::string const &what) {
    if (!have)
      throw Error(Errc::InvalidInput, what);
  };
  std::string out;
  if (kind == "qs-class" || kind == "p1-class") {
    need(o.gsets.size() == 1, kind + " needs exactly one --gset");
    GSet s = gset_arg(*ctx, o.gsets.front());
    out = (kind == "qs-class" ? quasi_split_class(s) : weil_restriction_p1_class(s)).format(*ctx);
  }
  else if (kind == "marks") {
    need(o.elems.size() == 1, "marks needs exactly one --elem");
    out = marks(ctx->parse_element(o.elems.front())).to_string();
  }
  else if (kind == "burnside-mul") {
    need(o.elems.size() >= 2, "burnside-mul needs at least two --elem");
    BurnsideElement p = ctx->parse_element(o.elems.front());
    for (std::size_t i = 1; i < o.elems.size(); ++i)
      p = p * ctx->parse_element(o.elems[i]);
    out = ctx->format(p);
  }
  else {
    need(!o.lattice.empty(), "torus-class needs --lattice");
    GaloisLattice l = lattice_arg(*ctx, o.lattice);
    ClassResult r;
    try {
      r = torus_class(l, *ctx, "T");
    }
    catch (Error const &e) {
      if (e.code() != Errc::NotQuasiSplit)
        throw;
      std::cerr << e.what() << "\n";
      return exit_failed;
    }
    out = r.polynomial->format(*ctx);
  }
  if (o.json)
    out = nlohmann::json{{"kind", kind}, {"value", out}}.dump(2);
  emit(o, out + "\n");
  return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Burnside and Lefschetz classes of tori and their classifying stacks"};
  app.require_subcommand(1);
  Options o;

  std::string scenario;
  auto *check = app.add_subcommand("check", "run a scenario and report its assertions");
  check->add_option("scenario", scenario, "basics, lemma-t, remark, thm15, thm16 or all")->required();
  check->add_option("--m", o.m, "thm16: torsion order is 2m")->check(CLI::PositiveNumber);
  check->add_option("--r", o.r, "thm15: number of extra G_m factors")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", o.seed, "seed of the random Burnside checks");
  check->add_flag("--strict", o.strict, "treat discrepancies as failures");
  check->add_option("--gset", o.gsets, "remark: algebra L as a G-set spec (repeatable)");
  check->add_option("--n", o.ns, "remark: torsion order (repeatable)")->check(CLI::PositiveNumber);

  std::string kind;
  auto *compute = app.add_subcommand("compute", "print one canonical value");
  compute->add_option("kind", kind, "qs-class, p1-class, marks, burnside-mul or torus-class")->required();
  compute->add_option("--gset", o.gsets, "G-set spec such as regular or coset:E12, or G-set JSON");
  // One value per flag, so "[E1]" is not read as a bracketed list.
  compute->add_option("--elem", o.elems, "Burnside element such as 2+[K]-[E1] (repeatable)")->allow_extra_args(false);
  compute->add_option("--lattice", o.lattice, "G, G', T, perm:/aug:/quot:<gset>, lattice JSON or a file");

  for (auto *sub : {check, compute}) {
    sub->add_option("--context", o.context, "context JSON file, or biquadratic / quadratic");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--out", o.out, "write the output to a file");
  }

  try {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (check->parsed())
      return cmd_check(scenario, o);
    return cmd_compute(kind, o);
  }
  catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
