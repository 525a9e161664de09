#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "malcev/scalar.hpp"

namespace malcev {

/// Coordinate vector. Carries no field of its own; functions that may see an
/// empty vector take the field explicitly.
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() : field_(Field::rational()), rows_(0), cols_(0) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  /// Throws ShapeError on ragged rows, FieldMismatch on foreign entries.
  static Matrix from_rows(const Field& f, std::size_t cols,
                          const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& f, std::size_t rows,
                             const std::vector<Vector>& columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Matrix transpose() const;
  /// Throws FieldMismatch if any entry belongs to a different field.
  void validate() const;

  Vector apply(const Vector& x) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Row-major flattening.
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Pivots are chosen by scanning columns left to
/// right and taking the topmost nonzero entry at or below the current row.
RrefResult rref(const Matrix& m);

/// Basis of the right null space, one vector per free column (in increasing
/// column order), with the free coordinate set to 1.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One solution of m x = b with free variables zero, or nullopt if none.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// The pivot columns of m (a basis of its column space), in column order.
std::vector<Vector> image_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

}  // namespace malcev
