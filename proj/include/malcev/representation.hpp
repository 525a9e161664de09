#pragma once

#include <cstddef>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/matrix.hpp"
#include "malcev/report.hpp"

namespace malcev {

/// Whether a check first verifies the axioms of the object it is built on.
enum class Preconditions { Verify, Assume };

/// A skew algebra acting on an m-dimensional module; rho()[i] is the
/// matrix of rho(e_i), with column c holding rho(e_i)(f_c).
class Representation {
 public:
  /// Throws NonSkewInput for dialgebras, ShapeError / FieldMismatch on
  /// malformed matrices.
  Representation(AlgebraData algebra, std::size_t module_dim, std::vector<Matrix> rho);

  const AlgebraData& algebra() const noexcept { return algebra_; }
  const Field& field() const noexcept { return algebra_.field(); }
  std::size_t algebra_dim() const noexcept { return algebra_.dim(); }
  std::size_t module_dim() const noexcept { return module_dim_; }
  const std::vector<Matrix>& rho() const noexcept { return rho_; }

  /// rho(x) = sum_i x_i rho(e_i)
  Matrix action(const Vector& x) const;
  /// rho(x)(m)
  Vector act(const Vector& x, const Vector& m) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  AlgebraData algebra_;
  std::size_t module_dim_;
  std::vector<Matrix> rho_;
};

/// Matrices are compared flattened row-major.
Vector flatten(const Matrix& m);

/// rho([[x,y],z]) = rho(x)rho(y)rho(z) - rho(z)rho(x)rho(y)
///                 + rho(y)rho([z,x]) - rho([y,z])rho(x)
/// as matrix identities on all basis triples. With Preconditions::Verify,
/// throws UnverifiedAlgebra unless the algebra passes check_malcev.
VerificationReport check_representation(const Representation& r,
                                         Preconditions pre = Preconditions::Verify);

/// rho(e_i) = ad(e_i). Throws UnverifiedAlgebra if a is not Malcev.
Representation adjoint_rep(const AlgebraData& a);

/// The zero action on an m-dimensional module.
Representation trivial_rep(const AlgebraData& a, std::size_t module_dim);

/// g + M with [x+m, y+n] = [x,y] + rho(x)n - rho(y)m, basis (e_1..e_n, f_1..f_m).
/// Throws UnverifiedRepresentation unless check_representation passes.
AlgebraData semidirect_malcev(const Representation& r);

}  // namespace malcev
