#ifndef MOTIVIC_STACK_CLASS_HPP
#define MOTIVIC_STACK_CLASS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin_polynomial.hpp"
#include "gset.hpp"

namespace motivic
{

enum class SpecialKind
{
  QuasiSplit, // class of R_{A/F}(G_m), certified by the Γ-set of A
  Lefschetz,  // L itself
};

/// A monic class allowed in denominators, with its certificate.
struct SpecialEntry
{
  std::string name;
  ArtinPolynomial polynomial;
  SpecialKind kind;
  std::optional<GSet> certificate;
};

/// Named classes of special groups. Entries are checked monic on insertion;
/// the torus engine is the only producer of quasi-split entries.
class SpecialRegistry
{
public:
  explicit SpecialRegistry(GroupPtr group);

  GroupPtr const &group() const
  { return _group; }

  /// Throws NotSpecial if the polynomial is not monic or a quasi-split entry
  /// has no certificate; throws InvalidInput on a conflicting redefinition.
  SpecialEntry const &add(SpecialEntry entry);

  /// Throws NotSpecial for unknown names.
  SpecialEntry const &get(std::string const &name) const;

  bool contains(SpecialEntry const &entry) const;

  std::vector<std::string> names() const;

private:
  GroupPtr _group;
  std::map<std::string, SpecialEntry> _entries;
};

/// Element of the monic-denominator localization modelling K0(Stacks_F):
///   polynomial · Π numerator_factors / Π denominator,
/// where both factor lists hold registered special classes. Keeping the
/// special factors symbolic is what makes inverse() possible.
class StackClass
{
public:
  static StackClass from_polynomial(ArtinPolynomial p);
  static StackClass from_special(SpecialEntry const &e);
  static StackClass one(GroupPtr group);

  GroupPtr const &group() const
  { return _poly.group(); }

  ArtinPolynomial const &polynomial_part() const
  { return _poly; }
  std::vector<SpecialEntry> const &numerator_factors() const
  { return _num; }
  std::vector<SpecialEntry> const &denominator() const
  { return _den; }

  /// Expanded numerator and denominator.
  ArtinPolynomial numerator_polynomial() const;
  ArtinPolynomial denominator_polynomial() const;

  /// Inverse; requires the polynomial part to be ±1, otherwise throws
  /// UnsoundDenominator.
  StackClass inverse() const;

  /// Division by a registered special class.
  StackClass over(SpecialEntry const &e) const;

  /// The class as a polynomial when the denominator divides exactly.
  std::optional<ArtinPolynomial> as_polynomial() const;

  friend StackClass operator*(StackClass const &a, StackClass const &b);

  /// "num / ((d1) * (d2))"; just "num" without denominator.
  std::string format(GaloisContext const &ctx) const;

private:
  explicit StackClass(ArtinPolynomial p);
  void normalize();

  ArtinPolynomial _poly;
  std::vector<SpecialEntry> _num;
  std::vector<SpecialEntry> _den;
};

struct EqualityVerdict
{
  bool equal;
  ZeroScope scope;
  /// x.num·y.den − y.num·x.den, negated if needed so that the first nonzero
  /// mark of its leading coefficient is positive.
  ArtinPolynomial difference;
  ZeroVerdict zero;
};

/// Cross-multiplies and runs is_zero on the difference. Throws
/// UnsoundDenominator if a factor of either class is not in the registry.
EqualityVerdict stack_equal(StackClass const &x, StackClass const &y, GaloisContext const &ctx,
                            SpecialRegistry const &registry);

} // namespace motivic

#endif // MOTIVIC_STACK_CLASS_HPP
