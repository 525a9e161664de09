#pragma once

#include <cstddef>
#include <vector>

#include "malcev/matrix.hpp"
#include "malcev/report.hpp"

namespace malcev {

/// [e_i, e_j] = sum_k coeffs[k] e_k
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vector coeffs;
};

/// A finite-dimensional algebra given by structure constants.
///
/// Skew algebras are specified by their entries with i < j; entries given
/// with i > j are folded onto (j, i) with a sign flip, and a pair appearing
/// twice after folding is rejected. Non-skew algebras (dialgebras) take the
/// full table over ordered pairs.
class AlgebraData {
 public:
  static AlgebraData skew(const Field& f, std::size_t dim, const std::vector<BracketEntry>& entries);
  static AlgebraData general(const Field& f, std::size_t dim,
                             const std::vector<BracketEntry>& entries);
  static AlgebraData abelian(const Field& f, std::size_t dim);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_skew() const noexcept { return skew_; }

  /// [e_i, e_j]
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  /// Stored form: nonzero entries with i < j for skew algebras, all nonzero
  /// ordered pairs otherwise, in lexicographic order.
  std::vector<BracketEntry> entries() const;

  /// The same bracket viewed as a non-skew table.
  AlgebraData as_general() const;
  /// x o y := [y, x]
  AlgebraData opposite() const;

  /// Matrix of [x, -]; column j holds [x, e_j].
  Matrix left_multiplication(const Vector& x) const;

  friend bool operator==(const AlgebraData& a, const AlgebraData& b);

 private:
  AlgebraData(const Field& f, std::size_t dim, bool skew);

  Field field_;
  std::size_t dim_;
  bool skew_;
  std::vector<Vector> table_;
  std::vector<bool> nonzero_;

  friend Vector bracket(const AlgebraData& a, const Vector& x, const Vector& y);
};

/// Bilinear extension of the structure constants. Throws ShapeError on
/// vectors of the wrong length.
Vector bracket(const AlgebraData& a, const Vector& x, const Vector& y);

/// J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]. Throws NonSkewInput on dialgebras.
Vector jacobiator(const AlgebraData& a, const Vector& x, const Vector& y, const Vector& z);

/// J(x,y,[x,z]) = [J(x,y,z),x] on basis triples and on x = e_i + e_j
/// (which suffices since the identity is quadratic in x). Over F_2 the
/// identity is replaced by the Sagle identity.
VerificationReport check_malcev(const AlgebraData& a);

/// [[x,z],[y,t]] = [[[x,y],z],t] + [[[y,z],t],x] + [[[z,t],x],y] + [[[t,x],y],z]
/// on all basis quadruples.
VerificationReport check_sagle(const AlgebraData& a);

VerificationReport check_jacobi(const AlgebraData& a);

/// [[x,y]+[y,x],z] = 0 and
/// [x,[y,[z,t]]] = [y,[z,[x,t]]] + [z,[[x,y],t]] + [[x,z],[y,t]] + [[x,[y,z]],t].
VerificationReport check_left_dialgebra(const AlgebraData& a);

/// The left axioms for the opposite bracket.
VerificationReport check_right_dialgebra(const AlgebraData& a);

/// [phi x, phi y]' = phi [x, y] on basis pairs; phi is dim(target) x dim(source).
VerificationReport check_homomorphism(const AlgebraData& source, const AlgebraData& target,
                                      const Matrix& phi);

/// check_malcev(a).passed(), after rejecting non-skew input.
bool is_malcev(const AlgebraData& a);

}  // namespace malcev
