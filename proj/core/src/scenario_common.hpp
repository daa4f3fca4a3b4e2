#ifndef MOTIVIC_SRC_SCENARIO_COMMON_HPP
#define MOTIVIC_SRC_SCENARIO_COMMON_HPP

#include <chrono>
#include <optional>
#include <string>

#include "motivic/scenarios.hpp"
#include "motivic/stack_class.hpp"
#include "motivic/torus.hpp"

namespace motivic::detail
{

// Collects classes, assertions and the merged trace of one scenario.
class Recorder
{
public:
  Recorder(std::string id, ContextPtr ctx);

  GaloisContext const &ctx() const
  { return *_ctx; }

  void param(std::string key, std::string value);
  void record(std::string name, std::string value);
  /// Merges the trace and records the class.
  void absorb(ClassResult const &r);
  void step(DerivationStep s);

  void assertion(Assertion a);
  void check(std::string name, bool pass, std::string expected, std::string computed, std::string witness = {});
  /// Pass on equality; otherwise Discrepancy when `expected` is a stated value
  /// and Fail when it is a derived one. The witness is the top nonzero
  /// coefficient of the difference and its marks.
  void compare(std::string name, ArtinPolynomial const &computed, ArtinPolynomial const &expected, bool stated);
  /// Records stack_equal(x, y) against the expected outcome.
  EqualityVerdict equality(std::string name, StackClass const &x, StackClass const &y, bool expect_equal,
                           SpecialRegistry const &registry);
  void charpoly(std::string const &class_name, ArtinPolynomial const &cls, GaloisLattice const &lattice);

  ScenarioReport finish();

private:
  ContextPtr _ctx;
  ScenarioReport _report;
  std::chrono::steady_clock::time_point _start;
};

/// Throws UnsupportedParameter unless ctx is the biquadratic setup.
void require_biquadratic(GaloisContext const &ctx);

ElementMask subgroup_mask(GaloisContext const &ctx, std::string const &label);
BurnsideElement label_class(GaloisContext const &ctx, std::string const &label);

/// L − [E] + 1 for a quadratic label.
ArtinPolynomial norm_one_polynomial(GaloisContext const &ctx, std::string const &label);

std::string zero_witness(ZeroVerdict const &z, GaloisContext const &ctx);

ClassResult product(std::string name, ClassResult const &a, ClassResult const &b, GaloisContext const &ctx,
                    std::vector<SideCondition> checks);

// Classes of R_K, G and T by division; shared by several scenarios.
struct GDerivation
{
  ClassResult r_k;
  ClassResult g;
  ClassResult t;
  StackClass g_stack; // R_K · G_m / R_E12
};

GDerivation derive_g(Recorder &rec, SpecialRegistry &registry);

// G' along the G_m-torsor over the norm-one tori and along its quasi-split
// resolution; the resolution also gives {BG}.
struct GPrimeDerivation
{
  ClassResult torsor_route;
  ClassResult resolution_route;
  ClassResult bg;
};

GPrimeDerivation derive_g_prime(Recorder &rec, SpecialRegistry &registry);

} // namespace motivic::detail

#endif
