#ifndef MOTIVIC_INT_MATRIX_HPP
#define MOTIVIC_INT_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace motivic
{

/// Dense integer matrix with overflow-checked arithmetic.
class IntMatrix
{
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::vector<std::vector<std::int64_t>> const &rows, std::size_t cols = 0);
  static IntMatrix diagonal(std::vector<std::int64_t> const &d);

  std::size_t rows() const
  { return _rows; }
  std::size_t cols() const
  { return _cols; }

  std::int64_t &operator()(std::size_t r, std::size_t c)
  { return _data[r * _cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const
  { return _data[r * _cols + c]; }

  std::vector<std::int64_t> column(std::size_t c) const;
  std::vector<std::int64_t> row(std::size_t r) const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const
  { return _rows == _cols; }

  /// Columns [first, first+count).
  IntMatrix columns(std::size_t first, std::size_t count) const;
  /// Rows [first, first+count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  /// [this | other]
  IntMatrix hconcat(IntMatrix const &other) const;

  friend IntMatrix operator*(IntMatrix const &a, IntMatrix const &b);
  friend IntMatrix operator+(IntMatrix const &a, IntMatrix const &b);
  friend IntMatrix operator-(IntMatrix const &a, IntMatrix const &b);
  friend IntMatrix operator*(std::int64_t k, IntMatrix const &a);
  friend std::vector<std::int64_t> operator*(IntMatrix const &a, std::vector<std::int64_t> const &v);
  friend bool operator==(IntMatrix const &, IntMatrix const &) = default;

  std::string to_string() const; // "[[1,0],[0,1]]"

private:
  std::size_t _rows = 0;
  std::size_t _cols = 0;
  std::vector<std::int64_t> _data;
};

/// Integer polynomial in one variable, ascending coefficients, trimmed.
class IntPoly
{
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  std::vector<std::int64_t> const &coefficients() const
  { return _c; }
  int degree() const
  { return static_cast<int>(_c.size()) - 1; }
  std::int64_t coefficient(std::size_t k) const
  { return k < _c.size() ? _c[k] : 0; }
  std::int64_t evaluate(std::int64_t x) const;

  friend IntPoly operator+(IntPoly const &a, IntPoly const &b);
  friend IntPoly operator-(IntPoly const &a, IntPoly const &b);
  friend IntPoly operator*(IntPoly const &a, IntPoly const &b);
  friend bool operator==(IntPoly const &, IntPoly const &) = default;

  /// Descending powers, e.g. "q^2 - 1".
  std::string to_string(char var = 'q') const;

private:
  void trim();
  std::vector<std::int64_t> _c;
};

/// Row-style Hermite normal form H = U·A with U unimodular: H is in row
/// echelon form, pivots are positive and entries above a pivot lie in
/// [0, pivot). Rows [rank, rows) of H are zero.
struct HermiteForm
{
  IntMatrix H;
  IntMatrix U;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

HermiteForm row_hermite(IntMatrix const &a);

/// Canonical basis (as columns) of the lattice spanned by the columns of `generators`.
IntMatrix column_basis(IntMatrix const &generators);

/// Basis (as columns, canonical) of {x : a·x = 0}.
IntMatrix integer_kernel(IntMatrix const &a);

std::size_t rank(IntMatrix const &a);

/// Nonzero Smith invariants d1 | d2 | ..., all positive.
std::vector<std::int64_t> smith_invariants(IntMatrix const &a);

std::int64_t determinant(IntMatrix const &a);

/// Inverse of a unimodular matrix; nullopt if det ≠ ±1.
std::optional<IntMatrix> inverse_unimodular(IntMatrix const &a);

/// x with basis·x = v for a basis of full column rank; nullopt if v is not in
/// the lattice spanned by the columns.
std::optional<std::vector<std::int64_t>> solve_in_lattice(IntMatrix const &basis,
                                                          std::vector<std::int64_t> const &v);

/// Coordinates of every column of `vectors` in `basis`; nullopt if any fails.
std::optional<IntMatrix> solve_columns(IntMatrix const &basis, IntMatrix const &vectors);

/// det(q·I − a), computed with the Faddeev–LeVerrier recursion.
IntPoly characteristic_polynomial(IntMatrix const &a);

} // namespace motivic

#endif // MOTIVIC_INT_MATRIX_HPP
