#pragma once

#include <cstddef>
#include <vector>

#include "malcev/matrix.hpp"

namespace malcev {

/// Dimensions of g (n), M (m), V (v) and W (w).
struct CochainShape {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t v = 0;
  std::size_t w = 0;

  std::size_t pair_count() const { return n * (n - (n > 0 ? 1 : 0)) / 2; }
  /// Position of (i, j), i < j, in lexicographic pair order.
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::size_t two_cochain_size() const { return w * m + w * pair_count() + v * n * m; }
  std::size_t one_cochain_size() const { return v * m + w * n; }

  friend bool operator==(const CochainShape&, const CochainShape&) = default;
};

/// (theta, omega, nu) with theta: M -> W, omega: g ^ g -> W stored for
/// i < j, and nu(e_i, -): M -> V.
///
/// Coordinates: theta row-major, then omega pair by pair, then for each i
/// the entries of nu_i column by column.
class TwoCochain {
 public:
  static TwoCochain zero(const Field& f, const CochainShape& s);
  static TwoCochain from_coordinates(const Field& f, const CochainShape& s, const Vector& c);
  /// Throws ShapeError / FieldMismatch on malformed parts.
  TwoCochain(const Field& f, const CochainShape& s, Matrix theta, std::vector<Vector> omega,
             std::vector<Matrix> nu);

  const Field& field() const noexcept { return field_; }
  const CochainShape& shape() const noexcept { return shape_; }

  const Matrix& theta() const noexcept { return theta_; }
  Matrix& theta() noexcept { return theta_; }
  const std::vector<Vector>& omega_pairs() const noexcept { return omega_; }
  /// omega(e_i, e_j) for any i, j (antisymmetric extension).
  Vector omega(std::size_t i, std::size_t j) const;
  void set_omega(std::size_t i, std::size_t j, const Vector& value);
  Vector omega(const Vector& x, const Vector& y) const;
  const std::vector<Matrix>& nu() const noexcept { return nu_; }
  std::vector<Matrix>& nu() noexcept { return nu_; }
  /// nu(x, -) as a v x m matrix.
  Matrix nu_at(const Vector& x) const;
  Vector nu(const Vector& x, const Vector& m) const;

  Vector coordinates() const;
  bool is_zero() const;

  TwoCochain& operator+=(const TwoCochain& o);
  TwoCochain& operator-=(const TwoCochain& o);
  friend TwoCochain operator+(TwoCochain a, const TwoCochain& b) { return a += b; }
  friend TwoCochain operator-(TwoCochain a, const TwoCochain& b) { return a -= b; }
  friend bool operator==(const TwoCochain&, const TwoCochain&) = default;

 private:
  Field field_;
  CochainShape shape_;
  Matrix theta_;
  std::vector<Vector> omega_;
  std::vector<Matrix> nu_;
};

/// (b0, b1) with b0: M -> V (v x m) and b1: g -> W (w x n).
/// Coordinates: b0 row-major, then b1 row-major.
struct OneCochain {
  static OneCochain zero(const Field& f, const CochainShape& s);
  static OneCochain from_coordinates(const Field& f, const CochainShape& s, const Vector& c);

  Matrix b0;
  Matrix b1;

  Vector coordinates() const;
  friend bool operator==(const OneCochain&, const OneCochain&) = default;
};

}  // namespace malcev
