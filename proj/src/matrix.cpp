#include "malcev/matrix.hpp"

#include <sstream>

#include "malcev/error.hpp"

namespace malcev {

namespace {

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::ShapeError, "vector lengths " + std::to_string(a.size()) +
                                           " and " + std::to_string(b.size()));
}

}  // namespace

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector& operator+=(Vector& a, const Vector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  return r += b;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  return r -= b;
}

Vector operator-(const Vector& a) {
  Vector r;
  r.reserve(a.size());
  for (const auto& s : a) r.push_back(-s);
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(s * x);
  return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  require_same_length(a, b);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].add_product(s, b[i]);
}

std::string to_string(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + "]";
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::ShapeError, "row " + std::to_string(r) + " has " +
                                             std::to_string(rows[r].size()) +
                                             " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  m.validate();
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  m.validate();
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_)
    throw Error(ErrorCode::ShapeError, "column of length " + std::to_string(v.size()) +
                                           " for a matrix with " + std::to_string(rows_) + " rows");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

void Matrix::validate() const {
  for (const auto& s : data_)
    if (s.field() != field_)
      throw Error(ErrorCode::FieldMismatch, "matrix over " + field_.to_string() +
                                                " holds an entry over " + s.field().to_string());
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::ShapeError, "applying a " + std::to_string(rows_) + "x" +
                                           std::to_string(cols_) + " matrix to a vector of length " +
                                           std::to_string(x.size()));
  Vector y = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) y[r].add_product(at(r, c), x[c]);
  }
  return y;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeError, "matrix sum shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::ShapeError, "matrix difference shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::ShapeError, "product of " + std::to_string(a.rows_) + "x" +
                                           std::to_string(a.cols_) + " and " +
                                           std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  if (a.field_ != b.field_)
    throw Error(ErrorCode::FieldMismatch, "product over " + a.field_.to_string() + " and " +
                                              b.field_.to_string());
  Matrix p(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p.at(i, j).add_product(aik, b.at(k, j));
    }
  return p;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ", ";
    out += malcev::to_string(row(r));
  }
  return out + "]";
}

RrefResult rref(const Matrix& m) {
  m.validate();
  RrefResult result{m, 0, {}};
  Matrix& a = result.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a.at(r, c).is_zero()) ++r;
    if (r == rows) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(r, k), a.at(pivot_row, k));
    const Scalar inv = a.at(pivot_row, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a.at(pivot_row, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a.at(i, c).is_zero()) continue;
      const Scalar factor = -a.at(i, c);
      for (std::size_t k = c; k < cols; ++k) a.at(i, k).add_product(factor, a.at(pivot_row, k));
    }
    result.pivot_cols.push_back(c);
    ++pivot_row;
  }
  result.rank = pivot_row;
  return result;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorCode::ShapeError, "right-hand side of length " + std::to_string(b.size()) +
                                           " for " + std::to_string(m.rows()) + " equations");
  const Field& f = m.field();
  Matrix augmented(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented.at(r, c) = m.at(r, c);
    augmented.at(r, m.cols()) = b[r];
  }
  const RrefResult rr = rref(augmented);
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(f, m.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.reduced.at(i, m.cols());
  return x;
}

std::vector<Vector> image_basis(const Matrix& m) {
  std::vector<Vector> basis;
  for (auto c : rref(m).pivot_cols) basis.push_back(m.column(c));
  return basis;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

}  // namespace malcev
