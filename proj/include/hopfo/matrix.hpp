// Dense matrices over a Field with exact arithmetic.
#pragma once

#include "hopfo/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hopfo {

/// Row-major dense matrix. Column vectors are n x 1 matrices.
///
/// Entries over GF(p) are stored as canonical residues, entries over Q as
/// reduced fractions; exactly one of the two backing stores is populated.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  /// Entries given as integers (reduced into the field).
  Matrix(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix zero(const Field& field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  /// Unit column vector e_i of length n.
  static Matrix unit_vector(const Field& field, std::size_t n, std::size_t i);
  static Matrix column(const Field& field, const std::vector<Scalar>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, std::int64_t v) { set(r, c, Scalar(field_, v)); }
  void add_to(std::size_t r, std::size_t c, const Scalar& v);

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix scaled(const Scalar& s) const;
  /// this += s * o
  void add_scaled(const Scalar& s, const Matrix& o);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix row(std::size_t r) const { return block(r, 0, 1, cols_); }
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  /// Row-major flattening into a column vector of length rows*cols.
  Matrix vectorize() const;
  /// Inverse of vectorize().
  static Matrix unvectorize(const Matrix& v, std::size_t rows, std::size_t cols);

  friend bool operator==(const Matrix& a, const Matrix& b);

  // Raw backing stores, used by the elimination kernels.
  std::vector<std::uint64_t>& residues() { return residues_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }
  std::vector<Rational>& rationals() { return rationals_; }
  const std::vector<Rational>& rationals() const { return rationals_; }

 private:
  void check_same_shape(const Matrix& o, const char* what) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> residues_;
  std::vector<Rational> rationals_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// a (x) b with composite index i * b.rows + i' (left factor major).
Matrix kronecker(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot = leftmost nonzero column, topmost unused row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Linear subspace of k^n, stored as the rows of a matrix in reduced
/// row-echelon form. Equal subspaces have identical representations.
class Subspace {
 public:
  Subspace(const Field& field, std::size_t ambient_dim);  // zero subspace

  /// Span of the rows of `generators`.
  static Subspace from_rows(const Matrix& generators);
  /// Span of the columns of `generators`.
  static Subspace from_columns(const Matrix& generators);
  static Subspace full(const Field& field, std::size_t n);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis vectors as columns (ambient x dim).
  Matrix basis_columns() const { return basis_.transpose(); }
  Matrix basis_vector(std::size_t i) const { return basis_.row(i).transpose(); }

  bool contains(const Matrix& column_vector) const;
  bool contains(const Subspace& other) const;
  /// Coordinates (dim x 1) of a member vector in the echelon basis; these are
  /// simply its entries at the pivot columns.
  Matrix coordinates(const Matrix& column_vector) const;
  /// Coordinates of each column of `columns`; result is dim x columns.cols().
  Matrix coordinates_of_columns(const Matrix& columns) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);

struct QuotientMap {
  Matrix proj;     // (n - dim sub) x n, kernel exactly `sub`
  Matrix section;  // n x (n - dim sub), proj * section = I
};

/// Projection onto k^n / sub using the non-pivot coordinates as the basis of
/// the quotient.
QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& sub);

}  // namespace hopfo
