#ifndef MOTIVIC_ARTIN_POLYNOMIAL_HPP
#define MOTIVIC_ARTIN_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "burnside.hpp"
#include "context.hpp"
#include "int_matrix.hpp"

namespace motivic
{

/// Polynomial in the Lefschetz symbol L with coefficients in B(Γ).
/// coefficient(k) multiplies L^k; trailing zero coefficients are trimmed.
class ArtinPolynomial
{
public:
  explicit ArtinPolynomial(GroupPtr group);
  ArtinPolynomial(GroupPtr group, std::vector<BurnsideElement> coefficients);

  static ArtinPolynomial constant(BurnsideElement c);
  static ArtinPolynomial integer(GroupPtr group, std::int64_t n);
  /// c·L^k
  static ArtinPolynomial monomial(BurnsideElement c, std::size_t k);
  /// L^k
  static ArtinPolynomial lefschetz(GroupPtr group, std::size_t k = 1);

  GroupPtr const &group() const
  { return _group; }

  /// -1 for the zero polynomial.
  int degree() const
  { return static_cast<int>(_c.size()) - 1; }
  bool is_zero_polynomial() const
  { return _c.empty(); }
  std::vector<BurnsideElement> const &coefficients() const
  { return _c; }
  BurnsideElement coefficient(std::size_t k) const;
  /// Leading coefficient is the unit class [Γ/Γ].
  bool is_monic() const;

  ArtinPolynomial &operator+=(ArtinPolynomial const &o);
  ArtinPolynomial &operator-=(ArtinPolynomial const &o);

  friend ArtinPolynomial operator+(ArtinPolynomial a, ArtinPolynomial const &b)
  { return a += b; }
  friend ArtinPolynomial operator-(ArtinPolynomial a, ArtinPolynomial const &b)
  { return a -= b; }
  friend ArtinPolynomial operator*(ArtinPolynomial const &a, ArtinPolynomial const &b);
  friend ArtinPolynomial operator*(BurnsideElement const &c, ArtinPolynomial const &a);
  ArtinPolynomial operator-() const;
  ArtinPolynomial pow(unsigned k) const;

  friend bool operator==(ArtinPolynomial const &a, ArtinPolynomial const &b);

  /// Canonical text, descending powers: "L^2 - [E]*L + ([E] - 1)".
  std::string format(GaloisContext const &ctx) const;
  /// Same, with default labels of the group.
  std::string to_string() const;

private:
  void require_same(ArtinPolynomial const &o) const;
  void trim();

  GroupPtr _group;
  std::vector<BurnsideElement> _c;
};

struct DivisionResult
{
  ArtinPolynomial quotient;
  ArtinPolynomial remainder;
};

/// Long division by a monic divisor; valid over any coefficient ring.
/// Throws InvalidInput if d is not monic.
DivisionResult divide_monic(ArtinPolynomial const &a, ArtinPolynomial const &d);

/// Quotient of an exact division; throws NotDivisible (message carries the
/// remainder) when the remainder is nonzero.
ArtinPolynomial exact_divide(ArtinPolynomial const &a, ArtinPolynomial const &d);

/// Coefficientwise induction from a subgroup built by Γ->subgroup().
ArtinPolynomial induce(ArtinPolynomial const &over_subgroup);

/// Replace each coefficient by its mark at ⟨g⟩ and L by q.
IntPoly cyclic_specialization(ArtinPolynomial const &a, int element);

/// Replace each coefficient by its mark at subgroup class `cls`.
IntPoly mark_specialization(ArtinPolynomial const &a, int cls);

enum class ZeroScope
{
  Ambient,   // both independence axioms enabled: verdict holds in K0(Stacks_F)
  ModelOnly, // an axiom flag is off: verdict holds in B(Γ)[L] only
};

struct ZeroVerdict
{
  bool zero = true;
  ZeroScope scope = ZeroScope::Ambient;
  int witness_degree = -1;                  // highest degree with nonzero marks
  std::optional<BurnsideElement> witness;   // that coefficient
  std::optional<MarkVector> witness_marks;
};

/// Zero iff every coefficient has zero mark vector.
ZeroVerdict is_zero(ArtinPolynomial const &a, GaloisContext const &ctx);

std::string scope_name(ZeroScope s);

} // namespace motivic

#endif // MOTIVIC_ARTIN_POLYNOMIAL_HPP
