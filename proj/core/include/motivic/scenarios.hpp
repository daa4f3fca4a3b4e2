#ifndef MOTIVIC_SCENARIOS_HPP
#define MOTIVIC_SCENARIOS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "context.hpp"
#include "derivation.hpp"

namespace motivic
{

enum class Verdict
{
  Pass,
  Fail,
  Discrepancy, // engine value differs from a stated value; not a failure
};

std::string_view verdict_name(Verdict v);

struct Assertion
{
  std::string name;
  Verdict verdict;
  std::string expected;
  std::string computed;
  std::string witness; // nonempty unless the verdict is Pass
  std::string scope;   // "ambient" or "model-only" for zero tests, else empty
};

struct ScenarioReport
{
  std::string id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> classes;
  std::vector<Assertion> assertions;
  Trace trace;
  std::vector<std::string> axioms;      // ids reachable in the trace
  std::vector<std::string> axiom_flags; // "A1 on: <provenance>"
  double wall_ms = 0;

  std::size_t count(Verdict v) const;
  /// No failures, and no discrepancies either when strict.
  bool ok(bool strict) const;
};

inline constexpr std::uint64_t default_seed = 20240611;

struct RemarkCase
{
  std::string algebra; // GSet spec, e.g. "coset:E1+coset:E2"
  std::int64_t n;
};

/// L ∈ {E1, E1 × E2, split quartic} × n ∈ {2, 3, 4}.
std::vector<RemarkCase> default_remark_cases();

struct ScenarioParams
{
  std::int64_t m = 1;
  int r = 2;
  std::vector<RemarkCase> remark = default_remark_cases();
  std::uint64_t seed = default_seed;
};

// Scenarios other than basics need the built-in biquadratic group and labels
// and throw UnsupportedParameter otherwise.

/// Quadratic building blocks for every index-2 subgroup, the pure quadratic
/// context, and a seeded random check of the mark homomorphism.
ScenarioReport scenario_basics(ContextPtr const &ctx, std::uint64_t seed);

/// The rank-2 torus T with 1 → G_m → G → T → 1, by division and by
/// stratifying a twisted (P^1)^2.
ScenarioReport scenario_torus_T(ContextPtr const &ctx);

/// {BG} ≠ {G}^-1 for G the norm-one torus of E1 × E2, and for G × G_m^r.
ScenarioReport scenario_bg_inverse(ContextPtr const &ctx, int r);

/// {BA} for the 2m-torsion A of R_E/G_m. Throws UnsupportedParameter for m < 1.
ScenarioReport scenario_ba_torsion(ContextPtr const &ctx, std::int64_t m);

/// {BA} and {BA'} for n-torsion of R_L(G_m) and of its norm-one subtorus.
ScenarioReport scenario_remark_torsion(ContextPtr const &ctx, std::vector<RemarkCase> const &cases);

/// basics, lemma-t, remark, thm15, thm16.
std::vector<std::string> const &scenario_ids();

/// Throws InvalidInput for an unknown id.
ScenarioReport run_scenario(std::string const &id, ContextPtr const &ctx, ScenarioParams const &params);

std::string render_text(ScenarioReport const &r);

/// {"scenario", "parameters", "classes", "assertions", "axioms",
///  "axiom_flags", "trace", "wall_ms"}; two-space indentation.
std::string render_json(ScenarioReport const &r);

} // namespace motivic

#endif // MOTIVIC_SCENARIOS_HPP
