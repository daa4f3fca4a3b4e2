#include "motivic/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <set>

#include "motivic/checked.hpp"
#include "motivic/error.hpp"

namespace motivic
{

GaloisLattice::GaloisLattice(GroupPtr group, std::string name, std::vector<IntMatrix> generator_action)
: _group(std::move(group)),
  _name(std::move(name)),
  _rank(0),
  _gen_action(std::move(generator_action))
{
  if (_gen_action.size() != _group->generator_count())
    throw Error(Errc::InvalidAction, "lattice " + _name + ": expected one matrix per generator");
  _rank = _gen_action.empty() ? 0 : _gen_action.front().rows();
  for (auto const &m : _gen_action) {
    if (m.rows() != _rank || m.cols() != _rank)
      throw Error(Errc::InvalidAction, "lattice " + _name + ": action matrix does not match rank");
    auto d = determinant(m);
    if (d != 1 && d != -1)
      throw Error(Errc::InvalidAction, "lattice " + _name + ": action matrix has determinant " + std::to_string(d));
  }

  std::size_t n = _group->order();
  _elem_action.resize(n);
  _elem_action[0] = IntMatrix::identity(_rank);
  for (std::size_t i = 1; i < n; ++i)
    _elem_action[i] = _gen_action[static_cast<std::size_t>(_group->word_generator(static_cast<int>(i)))] *
                      _elem_action[static_cast<std::size_t>(_group->word_parent(static_cast<int>(i)))];
  for (std::size_t j = 0; j < _gen_action.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      int gi = _group->multiply(_group->generator_element(j), static_cast<int>(i));
      if (_elem_action[static_cast<std::size_t>(gi)] != _gen_action[j] * _elem_action[i])
        throw Error(Errc::InvalidAction, "lattice " + _name + ": matrices violate the group relations");
    }
}

GaloisLattice GaloisLattice::make(GroupPtr group, std::string name, std::vector<IntMatrix> generator_action)
{
  return GaloisLattice(std::move(group), std::move(name), std::move(generator_action));
}

GaloisLattice GaloisLattice::trivial(GroupPtr group, std::size_t rank, std::string name)
{
  std::vector<IntMatrix> action(group->generator_count(), IntMatrix::identity(rank));
  return GaloisLattice(std::move(group), std::move(name), std::move(action));
}

GaloisLattice GaloisLattice::permutation(GSet const &s, std::string name)
{
  std::vector<IntMatrix> action;
  auto n = static_cast<std::size_t>(s.size());
  for (std::size_t j = 0; j < s.group()->generator_count(); ++j) {
    IntMatrix m(n, n);
    for (std::size_t x = 0; x < n; ++x)
      m(static_cast<std::size_t>(s.generator_action(j)[x]), x) = 1;
    action.push_back(std::move(m));
  }
  return GaloisLattice(s.group(), std::move(name), std::move(action));
}

GaloisLattice GaloisLattice::sign(GroupPtr group, ElementMask kernel, std::string name)
{
  if (!group->is_subgroup(kernel))
    throw Error(Errc::UnknownSubgroup, "sign character kernel is not a subgroup");
  auto k = static_cast<std::size_t>(std::popcount(kernel));
  if (k != group->order() && 2 * k != group->order())
    throw Error(Errc::NotQuadratic, "sign character kernel must have index 1 or 2");
  std::vector<IntMatrix> action;
  for (std::size_t j = 0; j < group->generator_count(); ++j) {
    bool in = kernel & (ElementMask{1} << group->generator_element(j));
    action.push_back(IntMatrix{{in ? 1 : -1}});
  }
  return GaloisLattice(std::move(group), std::move(name), std::move(action));
}

GaloisLattice GaloisLattice::augmentation_kernel(GSet const &s, std::string name)
{
  auto n = static_cast<std::size_t>(s.size());
  if (n == 0)
    throw Error(Errc::InvalidInput, "augmentation kernel of an empty set");
  IntMatrix basis(n, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    basis(i, i) = 1;
    basis(n - 1, i) = -1;
  }
  return permutation(s, "Z[S]").sublattice(basis, std::move(name));
}

GaloisLattice GaloisLattice::norm_quotient(GSet const &s, std::string name)
{
  auto n = static_cast<std::size_t>(s.size());
  if (n == 0)
    throw Error(Errc::InvalidInput, "norm quotient of an empty set");
  // ē_last = −Σ_{i<last} ē_i
  auto image = [n](std::size_t point) {
    std::vector<std::int64_t> v(n - 1, 0);
    if (point + 1 < n)
      v[point] = 1;
    else
      std::fill(v.begin(), v.end(), -1);
    return v;
  };
  std::vector<IntMatrix> action;
  for (std::size_t j = 0; j < s.group()->generator_count(); ++j) {
    IntMatrix m(n - 1, n - 1);
    for (std::size_t x = 0; x + 1 < n; ++x) {
      auto v = image(static_cast<std::size_t>(s.generator_action(j)[x]));
      for (std::size_t r = 0; r + 1 < n; ++r)
        m(r, x) = v[r];
    }
    action.push_back(std::move(m));
  }
  return GaloisLattice(s.group(), std::move(name), std::move(action));
}

GaloisLattice GaloisLattice::renamed(std::string name) const
{
  GaloisLattice l = *this;
  l._name = std::move(name);
  return l;
}

GaloisLattice GaloisLattice::sublattice(IntMatrix const &basis, std::string name) const
{
  if (basis.rows() != _rank || motivic::rank(basis) != basis.cols())
    throw Error(Errc::InvalidInput, "sublattice basis must be independent columns of length " + std::to_string(_rank));
  std::vector<IntMatrix> action;
  for (auto const &m : _gen_action) {
    auto x = solve_columns(basis, m * basis);
    if (!x)
      throw Error(Errc::InvalidInput, "span of the basis is not stable under the group");
    action.push_back(std::move(*x));
  }
  return GaloisLattice(_group, std::move(name), std::move(action));
}

bool GaloisLattice::same_action(GaloisLattice const &other) const
{
  return _group->same_as(*other._group) && _gen_action == other._gen_action;
}

namespace
{

IntMatrix block_diag(IntMatrix const &a, IntMatrix const &b)
{
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

} // namespace

GaloisLattice direct_sum(GaloisLattice const &a, GaloisLattice const &b, std::string name)
{
  if (!a.group()->same_as(*b.group()))
    throw Error(Errc::MixedGroups, "direct sum of lattices over different groups");
  std::vector<IntMatrix> action;
  for (std::size_t j = 0; j < a.group()->generator_count(); ++j)
    action.push_back(block_diag(a.generator_action(j), b.generator_action(j)));
  return GaloisLattice::make(a.group(), std::move(name), std::move(action));
}

// ---------------------------------------------------------------------------

LatticeMap::LatticeMap(GaloisLattice source, GaloisLattice target, IntMatrix matrix)
: _source(std::move(source)), _target(std::move(target)), _matrix(std::move(matrix))
{}

LatticeMap LatticeMap::make(GaloisLattice source, GaloisLattice target, IntMatrix matrix)
{
  if (!source.group()->same_as(*target.group()))
    throw Error(Errc::MixedGroups, "lattice map between different groups");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw Error(Errc::Incomposable, "map " + source.name() + " -> " + target.name() + " has shape " +
                                      std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()));
  for (std::size_t j = 0; j < source.group()->generator_count(); ++j)
    if (matrix * source.generator_action(j) != target.generator_action(j) * matrix)
      throw Error(Errc::NotEquivariant, "map " + source.name() + " -> " + target.name() +
                                          " does not commute with " + source.group()->generator_name(j));
  return LatticeMap(std::move(source), std::move(target), std::move(matrix));
}

LatticeMap LatticeMap::identity(GaloisLattice const &l)
{
  return LatticeMap(l, l, IntMatrix::identity(l.rank()));
}

LatticeMap LatticeMap::after(LatticeMap const &first) const
{
  if (!first._target.same_action(_source))
    throw Error(Errc::Incomposable, "cannot compose " + first._target.name() + " with " + _source.name());
  return LatticeMap(first._source, _target, _matrix * first._matrix);
}

GaloisLattice dual_lattice(GaloisLattice const &l)
{
  std::vector<IntMatrix> action;
  for (std::size_t j = 0; j < l.group()->generator_count(); ++j) {
    auto inv = inverse_unimodular(l.generator_action(j));
    action.push_back(inv->transpose());
  }
  return GaloisLattice::make(l.group(), l.name() + "^v", std::move(action));
}

LatticeMap dual_map(LatticeMap const &f)
{
  return LatticeMap::make(dual_lattice(f.target()), dual_lattice(f.source()), f.matrix().transpose());
}

LatticeMap direct_sum(LatticeMap const &f, LatticeMap const &g)
{
  return LatticeMap::make(direct_sum(f.source(), g.source(), f.source().name() + "+" + g.source().name()),
                          direct_sum(f.target(), g.target(), f.target().name() + "+" + g.target().name()),
                          block_diag(f.matrix(), g.matrix()));
}

// ---------------------------------------------------------------------------

ExactnessVerdict verify_exact_sequence(std::vector<LatticeMap> const &maps, bool flanked_by_zeros)
{
  if (maps.empty())
    throw Error(Errc::Incomposable, "empty sequence");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!maps[i].target().same_action(maps[i + 1].source()))
      throw Error(Errc::Incomposable, "map " + std::to_string(i) + " ends at " + maps[i].target().name() +
                                        " but map " + std::to_string(i + 1) + " starts at " +
                                        maps[i + 1].source().name());

  ExactnessVerdict v;
  std::string desc = flanked_by_zeros ? "0 -> " : "";
  desc += maps.front().source().name();
  for (auto const &m : maps)
    desc += " -> " + m.target().name();
  if (flanked_by_zeros)
    desc += " -> 0";
  v.description = desc;

  auto record = [&v](std::string name, bool ok, std::string const &node, std::string const &why) {
    v.checks.push_back({std::move(name), ok});
    if (!ok && v.pass) {
      v.pass = false;
      v.failed_node = node;
      v.reason = why;
    }
  };

  if (flanked_by_zeros) {
    auto const &f = maps.front();
    bool injective = rank(f.matrix()) == f.source().rank();
    record("injective at " + f.source().name(), injective, f.source().name(), "first map has a kernel");
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    auto const &node = maps[i].target().name();
    IntMatrix comp = maps[i + 1].matrix() * maps[i].matrix();
    bool zero = comp.is_zero();
    record("composite vanishes at " + node, zero, node, "composite is nonzero: " + comp.to_string());
    bool exact = column_basis(maps[i].matrix()) == integer_kernel(maps[i + 1].matrix());
    record("image equals kernel at " + node, exact, node, "image and kernel differ");
  }
  if (flanked_by_zeros) {
    auto const &f = maps.back();
    bool surjective = column_basis(f.matrix()) == IntMatrix::identity(f.target().rank());
    record("surjective onto " + f.target().name(), surjective, f.target().name(), "last map is not surjective");
  }
  return v;
}

ModKernel kernel_mod_n(LatticeMap const &f, std::int64_t n, std::string name)
{
  if (n <= 0)
    throw Error(Errc::InvalidModulus, "modulus must be positive, got " + std::to_string(n));
  std::size_t s = f.source().rank(), t = f.target().rank();

  // x with f·x ∈ n·Z^t  ⇔  (x, y) ∈ ker [f | −n·I]
  IntMatrix big = f.matrix().hconcat((-n) * IntMatrix::identity(t));
  IntMatrix k = integer_kernel(big);
  IntMatrix basis = column_basis(k.row_block(0, s));
  GaloisLattice kernel = f.source().sublattice(basis, std::move(name));
  LatticeMap inclusion = LatticeMap::make(kernel, f.source(), basis);

  std::int64_t index = std::llabs(determinant(basis));

  std::int64_t coker = 1;
  for (auto d : smith_invariants(f.matrix().hconcat(n * IntMatrix::identity(t))))
    coker = checked_mul(coker, d);
  std::int64_t total = 1;
  for (std::size_t i = 0; i < t; ++i)
    total = checked_mul(total, n);
  return ModKernel{std::move(kernel), std::move(inclusion), index, total / coker};
}

IsoVerdict check_iso_certificate(GaloisLattice const &a, GaloisLattice const &b, IntMatrix const &tau)
{
  if (!a.group()->same_as(*b.group()))
    throw Error(Errc::MixedGroups, "certificate between lattices over different groups");
  if (a.rank() != b.rank() || tau.rows() != a.rank() || tau.cols() != a.rank())
    throw Error(Errc::InvalidCertificate, "certificate shape does not match the lattice ranks");
  std::int64_t d = determinant(tau);
  if (d == 0)
    throw Error(Errc::InvalidCertificate, "certificate matrix is singular");
  if (d != 1 && d != -1)
    return {false, "det = " + std::to_string(d)};
  for (std::size_t j = 0; j < a.group()->generator_count(); ++j)
    if (a.generator_action(j) * tau != tau * b.generator_action(j))
      return {false, "conjugation fails for " + a.group()->generator_name(j)};
  return {true, "det = " + std::to_string(d)};
}

IntMatrix hom_basis(GaloisLattice const &source, GaloisLattice const &target)
{
  if (!source.group()->same_as(*target.group()))
    throw Error(Errc::MixedGroups, "homomorphisms between lattices over different groups");
  std::size_t r = target.rank(), c = source.rank();
  std::size_t gens = source.group()->generator_count();
  // unknown X(i,k) sits at i*c + k
  IntMatrix eq(gens * r * c, r * c);
  for (std::size_t j = 0; j < gens; ++j) {
    auto const &rs = source.generator_action(j);
    auto const &rt = target.generator_action(j);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < c; ++k) {
        std::size_t row = (j * r + i) * c + k;
        for (std::size_t l = 0; l < r; ++l)
          eq(row, l * c + k) = checked_add(eq(row, l * c + k), rt(i, l));
        for (std::size_t l = 0; l < c; ++l)
          eq(row, i * c + l) = checked_sub(eq(row, i * c + l), rs(l, k));
      }
  }
  return integer_kernel(eq);
}

IntMatrix hom_element(IntMatrix const &basis, std::size_t v, std::size_t rows, std::size_t cols)
{
  IntMatrix x(rows, cols);
  for (std::size_t e = 0; e < rows * cols; ++e)
    x(e / cols, e % cols) = basis(e, v);
  return x;
}

std::optional<IntMatrix> find_iso_certificate(GaloisLattice const &a, GaloisLattice const &b, int coefficient_bound)
{
  if (a.rank() != b.rank() || !a.group()->same_as(*b.group()))
    return std::nullopt;
  std::size_t n = a.rank();
  if (n == 0)
    return IntMatrix(0, 0);

  // τ with ρ_a(g)·τ = τ·ρ_b(g) is a homomorphism b → a.
  IntMatrix hom = hom_basis(b, a);
  std::size_t dim = hom.cols();
  if (dim == 0)
    return std::nullopt;

  auto to_matrix = [&](std::vector<std::int64_t> const &coeffs) {
    IntMatrix x(n, n);
    for (std::size_t v = 0; v < dim; ++v)
      if (coeffs[v] != 0)
        for (std::size_t e = 0; e < n * n; ++e)
          x(e / n, e % n) = checked_add(x(e / n, e % n), checked_mul(coeffs[v], hom(e, v)));
    return x;
  };

  // Combinations in order of growing support; each support tries every
  // nonzero value in [−bound, bound].
  std::size_t budget = 3'000'000;
  std::vector<std::int64_t> coeffs(dim, 0);
  std::optional<IntMatrix> found;
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t start, std::size_t left) -> bool {
    if (left == 0) {
      if (budget-- == 0)
        return true;
      IntMatrix x = to_matrix(coeffs);
      auto d = determinant(x);
      if (d == 1 || d == -1) {
        found = x;
        return true;
      }
      return false;
    }
    for (std::size_t v = start; v + left <= dim; ++v)
      for (int c = -coefficient_bound; c <= coefficient_bound; ++c) {
        if (c == 0)
          continue;
        coeffs[v] = c;
        if (pick(v + 1, left - 1))
          return true;
        coeffs[v] = 0;
      }
    return false;
  };
  for (std::size_t support = 1; support <= dim && !found && budget > 0; ++support)
    pick(0, support);
  return found;
}

PermutationBasis find_permutation_basis(GaloisLattice const &l)
{
  auto const &g = *l.group();
  std::size_t n = l.rank();
  if (n > 8)
    return {SearchStatus::Unknown, std::nullopt, std::nullopt, "rank above search limit"};
  if (n == 0)
    return {SearchStatus::Found, IntMatrix(0, 0), GSet::points(l.group(), 0), "empty basis"};

  // The trace of g on a permutation lattice counts fixed basis vectors.
  for (int e = 0; e < static_cast<int>(g.order()); ++e) {
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr += l.element_action(e)(i, i);
    if (tr < 0)
      return {SearchStatus::None, std::nullopt, std::nullopt,
              "trace " + std::to_string(tr) + " at element " + std::to_string(e) + " is negative"};
  }

  // Candidate orbits of vectors with entries in {-1,0,1}.
  struct OrbitCand
  {
    std::vector<std::vector<std::int64_t>> vectors;
  };
  std::vector<OrbitCand> cands;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> v(n, -1);
  for (;;) {
    bool nonzero = std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (nonzero && !seen.count(v)) {
      OrbitCand oc;
      std::set<std::vector<std::int64_t>> orbit;
      for (int e = 0; e < static_cast<int>(g.order()); ++e)
        orbit.insert(l.element_action(e) * v);
      std::vector<std::int64_t> neg(n);
      std::transform(v.begin(), v.end(), neg.begin(), [](std::int64_t x) { return -x; });
      for (auto const &w : orbit)
        seen.insert(w);
      if (!orbit.count(neg) && orbit.size() <= n) {
        oc.vectors.assign(orbit.begin(), orbit.end());
        cands.push_back(std::move(oc));
      }
    }
    std::size_t i = 0;
    while (i < n && v[i] == 1)
      v[i++] = -1;
    if (i == n)
      break;
    ++v[i];
  }

  std::vector<std::size_t> chosen;
  std::size_t steps = 0, step_limit = 2'000'000;
  std::optional<IntMatrix> basis;
  auto matrix_of = [&](std::vector<std::size_t> const &sel) {
    std::vector<std::vector<std::int64_t>> cols;
    for (auto c : sel)
      for (auto const &w : cands[c].vectors)
        cols.push_back(w);
    IntMatrix m(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < n; ++r)
        m(r, c) = cols[c][r];
    return m;
  };
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t filled) -> bool {
    if (++steps > step_limit)
      return true;
    if (filled == n) {
      IntMatrix m = matrix_of(chosen);
      auto d = determinant(m);
      if (d == 1 || d == -1) {
        basis = m;
        return true;
      }
      return false;
    }
    for (std::size_t c = start; c < cands.size(); ++c) {
      if (filled + cands[c].vectors.size() > n)
        continue;
      chosen.push_back(c);
      IntMatrix m = matrix_of(chosen);
      if (rank(m) == m.cols() && search(c + 1, filled + cands[c].vectors.size()))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  search(0, 0);

  if (!basis)
    return {SearchStatus::Unknown, std::nullopt, std::nullopt,
            steps > step_limit ? "search budget exhausted"
                               : "no permutation basis with entries in {-1,0,1}"};

  std::vector<Perm> action;
  for (std::size_t j = 0; j < g.generator_count(); ++j) {
    IntMatrix img = l.generator_action(j) * *basis;
    Perm p(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d)
        if (img.column(c) == basis->column(d))
          p[c] = static_cast<int>(d);
    action.push_back(std::move(p));
  }
  return {SearchStatus::Found, basis, GSet::from_action(l.group(), static_cast<int>(n), std::move(action)),
          "basis permuted by the group"};
}

std::optional<std::vector<ElementMask>> diagonal_characters(GaloisLattice const &l)
{
  auto const &g = *l.group();
  std::size_t n = l.rank();
  for (std::size_t j = 0; j < g.generator_count(); ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c && l.generator_action(j)(r, c) != 0)
          return std::nullopt;
  std::vector<ElementMask> kernels(n, 0);
  for (int e = 0; e < static_cast<int>(g.order()); ++e)
    for (std::size_t i = 0; i < n; ++i)
      if (l.element_action(e)(i, i) == 1)
        kernels[i] |= ElementMask{1} << e;
  return kernels;
}

} // namespace motivic
