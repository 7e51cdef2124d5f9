#include "hopfo/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace hopfo {

namespace {

struct PrimeOps {
  std::uint64_t p;
  using T = std::uint64_t;
  static std::vector<T>& data(Matrix& m) { return m.residues(); }
  static const std::vector<T>& data(const Matrix& m) { return m.residues(); }
  static bool is_zero(T a) { return a == 0; }
  T add(T a, T b) const { return modp::add(a, b, p); }
  T sub(T a, T b) const { return modp::sub(a, b, p); }
  T mul(T a, T b) const { return modp::mul(a, b, p); }
  T inv(T a) const { return modp::inv(a, p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  // a - f*b
  T submul(T a, T f, T b) const { return modp::sub(a, modp::mul(f, b, p), p); }
};

struct RationalOps {
  using T = Rational;
  static std::vector<T>& data(Matrix& m) { return m.rationals(); }
  static const std::vector<T>& data(const Matrix& m) { return m.rationals(); }
  static bool is_zero(const T& a) { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return T(1) / a; }
  T neg(const T& a) const { return -a; }
  T submul(const T& a, const T& f, const T& b) const { return a - f * b; }
};

template <class Fn>
decltype(auto) dispatch(const Field& f, Fn&& fn) {
  if (f.is_prime()) return fn(PrimeOps{f.characteristic()});
  return fn(RationalOps{});
}

void check_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) {
    throw DimensionError(std::string(what) + ": field mismatch " + a.field().to_string() + " vs " +
                         b.field().to_string());
  }
}

// In-place reduced row echelon form; returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref_in_place(Matrix& m, const Ops& ops) {
  auto& d = Ops::data(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && Ops::is_zero(d[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(d[piv * cols + j], d[r * cols + j]);
    }
    auto inv = ops.inv(d[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) d[r * cols + j] = ops.mul(d[r * cols + j], inv);
    // Columns of the pivot row that are nonzero; the rest of the update skips them.
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < cols; ++j) {
      if (!Ops::is_zero(d[r * cols + j])) nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto f = d[i * cols + c];
      if (Ops::is_zero(f)) continue;
      for (std::size_t j : nz) d[i * cols + j] = ops.submul(d[i * cols + j], f, d[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime()) {
    residues_.assign(rows * cols, 0);
  } else {
    rationals_.assign(rows * cols, Rational(0));
  }
}

Matrix::Matrix(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : Matrix(field, rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    std::size_t c = 0;
    for (auto v : row) set(r, c++, v);
    ++r;
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m.set(i, 0, 1);
  return m;
}

Matrix Matrix::column(const Field& field, const std::vector<Scalar>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return Scalar::from_residue(field_, residues_[r * cols_ + c]);
  return Scalar(field_, rationals_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_)) throw DimensionError("Matrix::set: field mismatch");
  if (field_.is_prime()) {
    residues_[r * cols_ + c] = v.residue();
  } else {
    rationals_[r * cols_ + c] = v.rational();
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_)) throw DimensionError("Matrix::add_to: field mismatch");
  if (field_.is_prime()) {
    auto& e = residues_[r * cols_ + c];
    e = modp::add(e, v.residue(), field_.characteristic());
  } else {
    rationals_[r * cols_ + c] += v.rational();
  }
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) {
    return std::all_of(residues_.begin(), residues_.end(), [](auto v) { return v == 0; });
  }
  return std::all_of(rationals_.begin(), rationals_.end(), [](const auto& v) { return v == 0; });
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

void Matrix::check_same_shape(const Matrix& o, const char* what) const {
  check_field(*this, o, what);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
  }
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same_shape(o, "matrix +");
  dispatch(field_, [&](auto ops) {
    auto& a = decltype(ops)::data(*this);
    const auto& b = decltype(ops)::data(o);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ops.add(a[i], b[i]);
  });
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_same_shape(o, "matrix -");
  dispatch(field_, [&](auto ops) {
    auto& a = decltype(ops)::data(*this);
    const auto& b = decltype(ops)::data(o);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ops.sub(a[i], b[i]);
  });
  return *this;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r -= o;
  return r;
}

Matrix Matrix::operator-() const { return Matrix(field_, rows_, cols_) - *this; }

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(*this, o, "matrix *");
  if (cols_ != o.rows_) {
    throw DimensionError("matrix *: inner dimensions " + std::to_string(cols_) + " and " +
                         std::to_string(o.rows_));
  }
  Matrix r(field_, rows_, o.cols_);
  const std::size_t n = o.cols_;
  if (field_.is_prime()) {
    const auto p = field_.characteristic();
    const auto& a = residues_;
    const auto& b = o.residues_;
    auto& c = r.residues_;
    // Accumulate unreduced products while they fit in 64 bits.
    const std::uint64_t bound = ~std::uint64_t{0} - (p - 1) * (p - 1);
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto f = a[i * cols_ + k];
        if (f == 0) continue;
        const auto* brow = &b[k * n];
        for (std::size_t j = 0; j < n; ++j) {
          auto v = acc[j] + f * brow[j];
          acc[j] = v > bound ? v % p : v;
        }
      }
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = acc[j] % p;
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& f = rationals_[i * cols_ + k];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const auto& bv = o.rationals_[k * n + j];
          if (bv != 0) r.rationals_[i * n + j] += f * bv;
        }
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(field_, rows_, cols_);
  r.add_scaled(s, *this);
  return r;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& o) {
  check_same_shape(o, "add_scaled");
  if (s.is_zero()) return;
  if (field_.is_prime()) {
    const auto p = field_.characteristic();
    const auto f = s.residue();
    for (std::size_t i = 0; i < residues_.size(); ++i) {
      if (o.residues_[i] != 0) residues_[i] = (residues_[i] + f * o.residues_[i]) % p;
    }
  } else {
    const auto f = s.rational();
    for (std::size_t i = 0; i < rationals_.size(); ++i) {
      if (o.rationals_[i] != 0) rationals_[i] += f * o.rationals_[i];
    }
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  dispatch(field_, [&](auto ops) {
    const auto& a = decltype(ops)::data(*this);
    auto& b = decltype(ops)::data(t);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) b[j * rows_ + i] = a[i * cols_ + j];
    }
  });
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionError("Matrix::block out of range");
  Matrix b(field_, nrows, ncols);
  dispatch(field_, [&](auto ops) {
    const auto& a = decltype(ops)::data(*this);
    auto& d = decltype(ops)::data(b);
    for (std::size_t i = 0; i < nrows; ++i) {
      for (std::size_t j = 0; j < ncols; ++j) d[i * ncols + j] = a[(r0 + i) * cols_ + c0 + j];
    }
  });
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  check_field(*this, b, "set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw DimensionError("Matrix::set_block out of range");
  }
  dispatch(field_, [&](auto ops) {
    auto& a = decltype(ops)::data(*this);
    const auto& d = decltype(ops)::data(b);
    for (std::size_t i = 0; i < b.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) a[(r0 + i) * cols_ + c0 + j] = d[i * b.cols_ + j];
    }
  });
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) r.set_block(i, 0, row(idx[i]));
  return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  return transpose().select_rows(idx).transpose();
}

Matrix Matrix::vectorize() const {
  Matrix v = *this;
  v.rows_ = rows_ * cols_;
  v.cols_ = 1;
  return v;
}

Matrix Matrix::unvectorize(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows_ * v.cols_ != rows * cols) throw DimensionError("unvectorize: size mismatch");
  Matrix m = v;
  m.rows_ = rows;
  m.cols_ = cols;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.residues_ == b.residues_ && a.rationals_ == b.rationals_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j == 0 ? "" : " ") << m.at(i, j);
    os << ']';
  }
  return os << ']';
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionError("hstack of nothing");
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks[0].rows()) throw DimensionError("hstack: row mismatch");
    cols += b.cols();
  }
  Matrix r(blocks[0].field(), blocks[0].rows(), cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    r.set_block(0, c, b);
    c += b.cols();
  }
  return r;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionError("vstack of nothing");
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks[0].cols()) throw DimensionError("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix r(blocks[0].field(), rows, blocks[0].cols());
  std::size_t row = 0;
  for (const auto& b : blocks) {
    r.set_block(row, 0, b);
    row += b.rows();
  }
  return r;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionError("block_diagonal of nothing");
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix r(blocks[0].field(), rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    r.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  check_field(a, b, "kronecker");
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const std::size_t rc = r.cols();
  dispatch(a.field(), [&](auto ops) {
    using O = decltype(ops);
    const auto& ad = O::data(a);
    const auto& bd = O::data(b);
    auto& rd = O::data(r);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& f = ad[i * a.cols() + j];
        if (O::is_zero(f)) continue;
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            const auto& g = bd[k * b.cols() + l];
            if (O::is_zero(g)) continue;
            rd[(i * b.rows() + k) * rc + j * b.cols() + l] = ops.mul(f, g);
          }
        }
      }
    }
  });
  return r;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  auto pivots = dispatch(m.field(), [&](auto ops) { return rref_in_place(r, ops); });
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  check_field(m, b, "solve");
  if (m.rows() != b.rows()) {
    throw DimensionError("solve: m has " + std::to_string(m.rows()) + " rows, b has " +
                         std::to_string(b.rows()));
  }
  const std::size_t n = m.cols();
  auto [red, pivots] = rref(hstack({m, b}));
  Matrix x(m.field(), n, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= n) return std::nullopt;
    x.set_block(pivots[r], 0, red.block(r, n, 1, b.cols()));
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const Field& field, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace Subspace::from_rows(const Matrix& generators) {
  auto [red, pivots] = rref(generators);
  Matrix basis = red.block(0, 0, pivots.size(), generators.cols());
  return Subspace(generators.cols(), std::move(basis), std::move(pivots));
}

Subspace Subspace::from_columns(const Matrix& generators) {
  return from_rows(generators.transpose());
}

Subspace Subspace::full(const Field& field, std::size_t n) {
  return from_rows(Matrix::identity(field, n));
}

Matrix Subspace::coordinates(const Matrix& v) const {
  Matrix c(field(), dim(), 1);
  for (std::size_t i = 0; i < pivots_.size(); ++i) c.set(i, 0, v.at(pivots_[i], 0));
  return c;
}

Matrix Subspace::coordinates_of_columns(const Matrix& columns) const {
  return columns.select_rows(pivots_);
}

bool Subspace::contains(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1) throw DimensionError("Subspace::contains: shape");
  // v is in the span iff v minus its pivot-coordinate combination vanishes.
  Matrix residual = v - basis_columns() * coordinates(v);
  return residual.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
  if (other.dim() == 0) return true;
  Matrix cols = other.basis_columns();
  Matrix residual = cols - basis_columns() * coordinates_of_columns(cols);
  return residual.is_zero();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace::sum: ambient mismatch");
  return from_rows(vstack({basis_, other.basis_}));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace::intersect: ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return Subspace(field(), ambient_);
  // (a, b) with U a = W b  <=>  [U | -W] (a, b) = 0
  Matrix u = basis_columns();
  Matrix stacked = hstack({u, -other.basis_columns()});
  Subspace k = kernel(stacked);
  if (k.dim() == 0) return Subspace(field(), ambient_);
  Matrix a = k.basis_columns().block(0, 0, dim(), k.dim());
  return from_columns(u * a);
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix gens(m.field(), free_cols.size(), n);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const std::size_t fc = free_cols[f];
    gens.set(f, fc, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) gens.set(f, pivots[r], -red.at(r, fc));
  }
  return Subspace::from_rows(gens);
}

Subspace image(const Matrix& m) { return Subspace::from_columns(m); }

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim) throw DimensionError("quotient_map: ambient mismatch");
  const auto& f = sub.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) complement.push_back(c);
  }
  const std::size_t q = complement.size();
  Matrix section(f, ambient_dim, q);
  for (std::size_t j = 0; j < q; ++j) section.set(complement[j], j, 1);
  // v -> v - B^T v[pivots], then read the complement coordinates.
  Matrix reducer = Matrix::identity(f, ambient_dim);
  if (sub.dim() > 0) {
    Matrix select_pivots(f, sub.dim(), ambient_dim);
    for (std::size_t r = 0; r < sub.dim(); ++r) select_pivots.set(r, sub.pivots()[r], 1);
    reducer -= sub.basis_columns() * select_pivots;
  }
  Matrix proj = section.transpose() * reducer;
  return {std::move(proj), std::move(section)};
}

}  // namespace hopfo
