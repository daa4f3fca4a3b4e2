#ifndef MOTIVIC_TESTS_ORACLES_HPP
#define MOTIVIC_TESTS_ORACLES_HPP

// Brute-force reference computations. None of them calls the table-driven
// code paths they are compared against.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "motivic/artin_polynomial.hpp"
#include "motivic/burnside.hpp"
#include "motivic/gset.hpp"
#include "motivic/int_matrix.hpp"
#include "motivic/perm_group.hpp"
#include "motivic/scenarios.hpp"

namespace oracle
{

using namespace motivic;

/// MOTIVIC_SEED if set, else the library default.
inline std::uint64_t seed()
{
  if (char const *s = std::getenv("MOTIVIC_SEED"); s && *s)
    return std::strtoull(s, nullptr, 10);
  return default_seed;
}

/// Points of s fixed by every element of h.
inline std::int64_t fixed_points(GSet const &s, ElementMask h)
{
  auto const &g = *s.group();
  std::int64_t n = 0;
  for (int p = 0; p < s.size(); ++p) {
    bool fixed = true;
    for (int e : g.elements_of(h))
      fixed = fixed && s.act(e, p) == p;
    n += fixed;
  }
  return n;
}

/// Orbits by breadth-first search over all elements; the class of each
/// stabilizer found by testing every element.
inline BurnsideElement orbit_class(GSet const &s)
{
  auto const &gp = s.group();
  auto const &g = *gp;
  BurnsideElement out(gp);
  std::vector<bool> seen(static_cast<std::size_t>(s.size()), false);
  for (int p = 0; p < s.size(); ++p) {
    if (seen[static_cast<std::size_t>(p)])
      continue;
    for (int e = 0; e < static_cast<int>(g.order()); ++e)
      seen[static_cast<std::size_t>(s.act(e, p))] = true;
    ElementMask stab = 0;
    for (int e = 0; e < static_cast<int>(g.order()); ++e)
      if (s.act(e, p) == p)
        stab |= ElementMask{1} << e;
    out += BurnsideElement::basis(gp, g.class_of(stab));
  }
  return out;
}

/// S × T built pointwise, (a, b) ↦ a·|T| + b.
inline GSet product_set(GSet const &s, GSet const &t)
{
  auto const &g = *s.group();
  std::vector<Perm> gens;
  for (std::size_t j = 0; j < g.generator_count(); ++j) {
    Perm p(static_cast<std::size_t>(s.size() * t.size()));
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < t.size(); ++b)
        p[static_cast<std::size_t>(a * t.size() + b)] =
            s.generator_action(j)[static_cast<std::size_t>(a)] * t.size() +
            t.generator_action(j)[static_cast<std::size_t>(b)];
    gens.push_back(std::move(p));
  }
  return GSet::from_action(s.group(), s.size() * t.size(), std::move(gens));
}

/// Γ ×_H S for an H-set S with H = s.group() a subgroup of its parent.
inline GSet induced_set(GSet const &s)
{
  auto const &h = *s.group();
  GroupPtr const &gp = h.parent();
  auto const &g = *gp;
  ElementMask hmask = 0;
  std::map<int, int> local;
  for (int i = 0; i < static_cast<int>(h.order()); ++i) {
    hmask |= ElementMask{1} << h.to_parent(i);
    local[h.to_parent(i)] = i;
  }
  // left coset representatives c_i
  std::vector<int> reps;
  ElementMask covered = 0;
  for (int e = 0; e < static_cast<int>(g.order()); ++e) {
    if (covered >> e & 1)
      continue;
    reps.push_back(e);
    for (int x : g.elements_of(hmask))
      covered |= ElementMask{1} << g.multiply(e, x);
  }
  int n = static_cast<int>(reps.size()) * s.size();
  std::vector<Perm> gens;
  for (std::size_t j = 0; j < g.generator_count(); ++j) {
    int x = g.generator_element(j);
    Perm p(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      int xc = g.multiply(x, reps[i]);
      for (std::size_t k = 0; k < reps.size(); ++k) {
        int hh = g.multiply(g.inverse(reps[k]), xc);
        if (!(hmask >> hh & 1))
          continue;
        for (int a = 0; a < s.size(); ++a)
          p[i * static_cast<std::size_t>(s.size()) + static_cast<std::size_t>(a)] =
              static_cast<int>(k) * s.size() + s.act(local.at(hh), a);
      }
    }
    gens.push_back(std::move(p));
  }
  return GSet::from_action(gp, n, std::move(gens));
}

/// Coefficients uniform in [-span, span].
inline BurnsideElement random_element(GroupPtr const &g, std::mt19937_64 &rng, int span = 3)
{
  std::uniform_int_distribution<int> d(-span, span);
  BurnsideElement a(g);
  for (std::size_t c = 0; c < g->class_count(); ++c)
    a += BurnsideElement::basis(g, static_cast<int>(c), d(rng));
  return a;
}

/// Fraction-free elimination on a copy; small matrices only.
inline std::int64_t det(std::vector<std::vector<std::int64_t>> m)
{
  std::size_t n = m.size();
  if (n == 0)
    return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Invariant factors s_k = d_k / d_{k-1}, d_k the gcd of the k×k minors.
inline std::vector<std::int64_t> smith_by_minors(IntMatrix const &a)
{
  std::size_t r = a.rows(), c = a.cols();
  std::vector<std::int64_t> d{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::int64_t g = 0;
    std::vector<std::size_t> rs(k), cs(k);
    auto next = [](std::vector<std::size_t> &idx, std::size_t n) {
      std::size_t k = idx.size();
      for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    std::iota(rs.begin(), rs.end(), std::size_t{0});
    do {
      std::iota(cs.begin(), cs.end(), std::size_t{0});
      do {
        std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            m[i][j] = a(rs[i], cs[j]);
        g = std::gcd(g, det(m));
      } while (next(cs, c));
    } while (next(rs, r));
    if (g == 0)
      break;
    d.push_back(g);
  }
  std::vector<std::int64_t> s;
  for (std::size_t k = 1; k < d.size(); ++k)
    s.push_back(d[k] / d[k - 1]);
  return s;
}

/// det(qI − A) by cofactor expansion along the first row.
inline IntPoly det_charpoly(IntMatrix const &a)
{
  std::size_t n = a.rows();
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = i == j ? IntPoly({-a(i, j), 1}) : IntPoly({-a(i, j)});
  auto rec = [](auto &self, std::vector<std::vector<IntPoly>> const &x) -> IntPoly {
    std::size_t k = x.size();
    if (k == 0)
      return IntPoly({1});
    IntPoly sum;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<IntPoly>> minor;
      for (std::size_t i = 1; i < k; ++i) {
        std::vector<IntPoly> row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != j)
            row.push_back(x[i][c]);
        minor.push_back(std::move(row));
      }
      IntPoly term = x[0][j] * self(self, minor);
      sum = j % 2 == 0 ? sum + term : sum - term;
    }
    return sum;
  };
  return rec(rec, m);
}

/// Cycle lengths of element e on s.
inline std::vector<int> cycles(GSet const &s, int e)
{
  std::vector<int> out;
  std::vector<bool> seen(static_cast<std::size_t>(s.size()), false);
  for (int p = 0; p < s.size(); ++p) {
    int len = 0;
    for (int x = p; !seen[static_cast<std::size_t>(x)]; x = s.act(e, x)) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    if (len > 0)
      out.push_back(len);
  }
  return out;
}

/// Points of R_S(G_m) (sign −1) or R_S(P^1) (sign +1) over F_q when
/// Frobenius acts as e: the product of q^len ± 1 over the cycles.
inline IntPoly frobenius_count(GSet const &s, int e, int sign)
{
  IntPoly out({1});
  for (int len : cycles(s, e)) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(len) + 1, 0);
    c[0] = sign;
    c.back() = 1;
    out = out * IntPoly(c);
  }
  return out;
}

/// Every Γ-set with at most `max_points` points, one per isomorphism type.
inline std::vector<GSet> small_gsets(GroupPtr const &g, int max_points)
{
  std::vector<GSet> transitive;
  for (auto const &c : g->subgroup_classes())
    transitive.push_back(GSet::cosets(g, c.representative));
  std::vector<GSet> out;
  auto rec = [&](auto &self, std::size_t from, GSet const &acc) -> void {
    out.push_back(acc);
    for (std::size_t i = from; i < transitive.size(); ++i)
      if (acc.size() + transitive[i].size() <= max_points)
        self(self, i, acc.disjoint_union(transitive[i]));
  };
  for (std::size_t i = 0; i < transitive.size(); ++i)
    if (transitive[i].size() <= max_points)
      rec(rec, i, transitive[i]);
  return out;
}

} // namespace oracle

#endif
