#ifndef MOTIVIC_DERIVATION_HPP
#define MOTIVIC_DERIVATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "artin_polynomial.hpp"
#include "stack_class.hpp"

namespace motivic
{

/// Facts the engine takes on trust. Statements are the engine's own wording.
struct Axiom
{
  std::string id;
  std::string statement;
};

namespace axioms
{
inline constexpr char const *coefficient_independence = "A1";
inline constexpr char const *field_independence = "A2";
inline constexpr char const *rank_two_rational = "rank-2-rational";
inline constexpr char const *pointed_conic = "pointed-conic";
inline constexpr char const *quadric_rulings = "quadric-rulings";
} // namespace axioms

std::vector<Axiom> const &axiom_catalogue();
/// Throws InvalidInput for unknown ids.
Axiom const &axiom(std::string const &id);

enum class Justification
{
  Verified,
  Axiom,
};

struct SideCondition
{
  std::string check;
  bool pass;
};

struct DerivationStep
{
  std::string rule;
  std::vector<std::string> premises;
  std::vector<SideCondition> side_conditions;
  std::string output;  // name of the derived class
  std::string value;   // its canonical text
  Justification justification;
  std::vector<std::string> axioms; // ids, nonempty iff justification is Axiom
};

/// Ordered, acyclic list of rule applications. Every premise must be a
/// declared input or the output of an earlier step.
class Trace
{
public:
  /// Declares an input class that needs no derivation.
  void given(std::string name, std::string value);

  /// Throws InvalidInput if a premise is unknown, a Verified step lacks a
  /// passing side condition or has a failing one, or an Axiom step lacks
  /// axiom ids. Re-deriving a known output with the same value is a no-op.
  void add(DerivationStep step);

  /// Appends the givens and steps of `other` that are not yet present.
  void append(Trace const &other);

  bool knows(std::string const &name) const;

  std::vector<std::pair<std::string, std::string>> const &givens() const
  { return _givens; }
  std::vector<DerivationStep> const &steps() const
  { return _steps; }

  /// Sorted ids of every axiom used by a step.
  std::vector<std::string> axioms() const;

  /// [{"rule","premises","side_conditions":[{"check","verdict"}],"output",
  ///   "value","justification","axioms"}]
  std::string to_json() const;

private:
  std::vector<std::pair<std::string, std::string>> _givens;
  std::vector<DerivationStep> _steps;
};

enum class Rationality
{
  Yes,
  Unknown,
};

struct RationalityFlag
{
  Rationality value = Rationality::Unknown;
  std::string provenance;
};

struct ClassResult
{
  std::string name;
  std::optional<ArtinPolynomial> polynomial;
  std::optional<StackClass> stack;
  RationalityFlag stably_rational;
  Trace trace;
};

} // namespace motivic

#endif // MOTIVIC_DERIVATION_HPP
