#include "motivic/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "motivic/checked.hpp"
#include "motivic/error.hpp"

namespace motivic
{

namespace
{
__extension__ using wide = __int128;
} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
: _rows(rows), _cols(cols), _data(rows * cols, fill)
{}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
  _rows = rows.size();
  _cols = _rows ? rows.begin()->size() : 0;
  for (auto const &r : rows) {
    if (r.size() != _cols)
      throw Error(Errc::InvalidInput, "ragged matrix literal");
    _data.insert(_data.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<std::int64_t>> const &rows, std::size_t cols)
{
  if (!rows.empty())
    cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(Errc::InvalidInput, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(std::vector<std::int64_t> const &d)
{
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t c) const
{
  std::vector<std::int64_t> v(_rows);
  for (std::size_t r = 0; r < _rows; ++r)
    v[r] = (*this)(r, c);
  return v;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t r) const
{
  return {_data.begin() + static_cast<std::ptrdiff_t>(r * _cols),
          _data.begin() + static_cast<std::ptrdiff_t>((r + 1) * _cols)};
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const
{
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t r = 0; r < _rows; ++r)
    out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const
{
  IntMatrix t(_cols, _rows);
  for (std::size_t r = 0; r < _rows; ++r)
    for (std::size_t c = 0; c < _cols; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const
{
  return std::all_of(_data.begin(), _data.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const
{
  IntMatrix m(_rows, count);
  for (std::size_t r = 0; r < _rows; ++r)
    for (std::size_t c = 0; c < count; ++c)
      m(r, c) = (*this)(r, first + c);
  return m;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const
{
  IntMatrix m(count, _cols);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < _cols; ++c)
      m(r, c) = (*this)(first + r, c);
  return m;
}

IntMatrix IntMatrix::hconcat(IntMatrix const &other) const
{
  if (other._rows != _rows)
    throw Error(Errc::Incomposable, "row count mismatch in concatenation");
  IntMatrix m(_rows, _cols + other._cols);
  for (std::size_t r = 0; r < _rows; ++r) {
    for (std::size_t c = 0; c < _cols; ++c)
      m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other._cols; ++c)
      m(r, _cols + c) = other(r, c);
  }
  return m;
}

IntMatrix operator*(IntMatrix const &a, IntMatrix const &b)
{
  if (a._cols != b._rows)
    throw Error(Errc::Incomposable,
                "cannot multiply " + std::to_string(a._rows) + "x" + std::to_string(a._cols) +
                " by " + std::to_string(b._rows) + "x" + std::to_string(b._cols));
  IntMatrix m(a._rows, b._cols);
  for (std::size_t i = 0; i < a._rows; ++i)
    for (std::size_t k = 0; k < a._cols; ++k) {
      std::int64_t x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b._cols; ++j)
        m(i, j) = checked_add(m(i, j), checked_mul(x, b(k, j)));
    }
  return m;
}

IntMatrix operator+(IntMatrix const &a, IntMatrix const &b)
{
  if (a._rows != b._rows || a._cols != b._cols)
    throw Error(Errc::Incomposable, "matrix sum of different shapes");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m._data.size(); ++i)
    m._data[i] = checked_add(m._data[i], b._data[i]);
  return m;
}

IntMatrix operator-(IntMatrix const &a, IntMatrix const &b)
{
  return a + (-1) * b;
}

IntMatrix operator*(std::int64_t k, IntMatrix const &a)
{
  IntMatrix m = a;
  for (auto &x : m._data)
    x = checked_mul(x, k);
  return m;
}

std::vector<std::int64_t> operator*(IntMatrix const &a, std::vector<std::int64_t> const &v)
{
  if (a._cols != v.size())
    throw Error(Errc::Incomposable, "matrix-vector size mismatch");
  std::vector<std::int64_t> r(a._rows, 0);
  for (std::size_t i = 0; i < a._rows; ++i)
    for (std::size_t k = 0; k < a._cols; ++k)
      r[i] = checked_add(r[i], checked_mul(a(i, k), v[k]));
  return r;
}

std::string IntMatrix::to_string() const
{
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < _rows; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < _cols; ++c)
      os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<std::int64_t> coeffs)
: _c(std::move(coeffs))
{ trim(); }

void IntPoly::trim()
{
  while (!_c.empty() && _c.back() == 0)
    _c.pop_back();
}

std::int64_t IntPoly::evaluate(std::int64_t x) const
{
  std::int64_t r = 0;
  for (auto it = _c.rbegin(); it != _c.rend(); ++it)
    r = checked_add(checked_mul(r, x), *it);
  return r;
}

IntPoly operator+(IntPoly const &a, IntPoly const &b)
{
  std::vector<std::int64_t> c(std::max(a._c.size(), b._c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(a.coefficient(i), b.coefficient(i));
  return IntPoly(std::move(c));
}

IntPoly operator-(IntPoly const &a, IntPoly const &b)
{
  std::vector<std::int64_t> c(std::max(a._c.size(), b._c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_sub(a.coefficient(i), b.coefficient(i));
  return IntPoly(std::move(c));
}

IntPoly operator*(IntPoly const &a, IntPoly const &b)
{
  if (a._c.empty() || b._c.empty())
    return IntPoly();
  std::vector<std::int64_t> c(a._c.size() + b._c.size() - 1, 0);
  for (std::size_t i = 0; i < a._c.size(); ++i)
    for (std::size_t j = 0; j < b._c.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a._c[i], b._c[j]));
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string(char var) const
{
  if (_c.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = _c.size(); k-- > 0;) {
    std::int64_t v = _c[k];
    if (v == 0)
      continue;
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    std::int64_t a = v < 0 ? -v : v;
    if (k == 0 || a != 1)
      os << a;
    if (k > 0)
      os << var;
    if (k > 1)
      os << '^' << k;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace
{

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    std::swap(m(a, c), m(b, c));
}

// row_t -= q * row_s
void sub_row(IntMatrix &m, std::size_t t, std::size_t s, std::int64_t q)
{
  if (q == 0)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(t, c) = checked_sub(m(t, c), checked_mul(q, m(s, c)));
}

void negate_row(IntMatrix &m, std::size_t r)
{
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(r, c) = checked_sub(0, m(r, c));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    std::swap(m(r, a), m(r, b));
}

void sub_col(IntMatrix &m, std::size_t t, std::size_t s, std::int64_t q)
{
  if (q == 0)
    return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    m(r, t) = checked_sub(m(r, t), checked_mul(q, m(r, s)));
}

} // namespace

HermiteForm row_hermite(IntMatrix const &a)
{
  HermiteForm hf{a, IntMatrix::identity(a.rows()), 0, {}};
  IntMatrix &h = hf.H;
  IntMatrix &u = hf.U;
  std::size_t m = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == m || std::llabs(h(i, c)) < std::llabs(h(best, c))))
          best = i;
      if (best == m)
        break;
      has_pivot = true;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0)
          continue;
        std::int64_t q = floor_div(h(i, c), h(r, c));
        sub_row(h, i, r, q);
        sub_row(u, i, r, q);
        if (h(i, c) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (!has_pivot)
      continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t q = floor_div(h(i, c), h(r, c));
      sub_row(h, i, r, q);
      sub_row(u, i, r, q);
    }
    hf.pivot_cols.push_back(c);
    ++r;
  }
  hf.rank = r;
  return hf;
}

IntMatrix column_basis(IntMatrix const &generators)
{
  auto hf = row_hermite(generators.transpose());
  return hf.H.row_block(0, hf.rank).transpose();
}

IntMatrix integer_kernel(IntMatrix const &a)
{
  auto hf = row_hermite(a.transpose());
  std::size_t n = a.cols();
  IntMatrix k = hf.U.row_block(hf.rank, n - hf.rank).transpose();
  if (k.cols() == 0)
    return IntMatrix(n, 0);
  return column_basis(k);
}

std::size_t rank(IntMatrix const &a)
{
  return row_hermite(a).rank;
}

std::vector<std::int64_t> smith_invariants(IntMatrix const &a)
{
  IntMatrix m = a;
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<std::int64_t> d;
  for (std::size_t t = 0; t < n; ++t) {
    // bring the smallest nonzero entry of the trailing block to (t,t)
    auto place_min = [&]() {
      std::size_t bi = m.rows(), bj = m.cols();
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (m(i, j) != 0 && (bi == m.rows() || std::llabs(m(i, j)) < std::llabs(m(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m.rows())
        return false;
      swap_rows(m, t, bi);
      swap_cols(m, t, bj);
      return true;
    };
    if (!place_min())
      break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        sub_row(m, i, t, floor_div(m(i, t), m(t, t)));
        dirty |= m(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        sub_col(m, j, t, floor_div(m(t, j), m(t, t)));
        dirty |= m(t, j) != 0;
      }
      if (dirty) {
        place_min();
        continue;
      }
      // divisibility: d_t must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < m.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(i, j) % m(t, t) != 0) {
            sub_row(m, t, i, -1);
            fixed = true;
            break;
          }
      if (!fixed)
        break;
    }
    d.push_back(std::llabs(m(t, t)));
  }
  return d;
}

std::int64_t determinant(IntMatrix const &a)
{
  if (!a.is_square())
    throw Error(Errc::Incomposable, "determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntMatrix m = a;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        wide v = static_cast<wide>(m(i, j)) * m(k, k) - static_cast<wide>(m(i, k)) * m(k, j);
        v /= prev; // exact by Sylvester's identity
        if (v > INT64_MAX || v < INT64_MIN)
          throw Error(Errc::Overflow, "determinant");
        m(i, j) = static_cast<std::int64_t>(v);
      }
    prev = m(k, k);
  }
  return checked_mul(sign, m(n - 1, n - 1));
}

std::optional<IntMatrix> inverse_unimodular(IntMatrix const &a)
{
  if (!a.is_square())
    return std::nullopt;
  auto hf = row_hermite(a);
  if (hf.rank != a.rows() || hf.H != IntMatrix::identity(a.rows()))
    return std::nullopt;
  return hf.U;
}

std::optional<std::vector<std::int64_t>> solve_in_lattice(IntMatrix const &basis,
                                                          std::vector<std::int64_t> const &v)
{
  auto hf = row_hermite(basis);
  auto y = hf.U * v;
  for (std::size_t i = hf.rank; i < y.size(); ++i)
    if (y[i] != 0)
      return std::nullopt;
  std::vector<std::int64_t> x(basis.cols(), 0);
  for (std::size_t r = hf.rank; r-- > 0;) {
    std::size_t p = hf.pivot_cols[r];
    std::int64_t acc = y[r];
    for (std::size_t j = p + 1; j < basis.cols(); ++j)
      acc = checked_sub(acc, checked_mul(hf.H(r, j), x[j]));
    if (acc % hf.H(r, p) != 0)
      return std::nullopt;
    x[p] = acc / hf.H(r, p);
  }
  if (basis * x != v)
    return std::nullopt;
  return x;
}

std::optional<IntMatrix> solve_columns(IntMatrix const &basis, IntMatrix const &vectors)
{
  IntMatrix out(basis.cols(), vectors.cols());
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    auto x = solve_in_lattice(basis, vectors.column(c));
    if (!x)
      return std::nullopt;
    for (std::size_t r = 0; r < x->size(); ++r)
      out(r, c) = (*x)[r];
  }
  return out;
}

IntPoly characteristic_polynomial(IntMatrix const &a)
{
  if (!a.is_square())
    throw Error(Errc::Incomposable, "characteristic polynomial of a non-square matrix");
  std::size_t n = a.rows();
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * IntMatrix::identity(n);
    IntMatrix am = a * m;
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr = checked_add(tr, am(i, i));
    c[n - k] = -tr / static_cast<std::int64_t>(k);
  }
  return IntPoly(std::move(c));
}

} // namespace motivic
