#pragma once

#include <cstddef>
#include <vector>

#include "malcev/cochain.hpp"
#include "malcev/embedding_tensor.hpp"

namespace malcev {

/// Coefficients (V, W, T', rho1, rho2, rho3) over a base embedding tensor:
/// T': V -> W (w x v), rho1(e_i) on V (v x v), rho2(e_i) on W (w x w),
/// rho3(f_k): W -> V (v x w).
class EtRepresentation {
 public:
  /// Throws ShapeError / FieldMismatch on malformed blocks.
  EtRepresentation(EmbeddingTensor base, std::size_t v, std::size_t w, Matrix Tprime,
                   std::vector<Matrix> rho1, std::vector<Matrix> rho2, std::vector<Matrix> rho3);

  const EmbeddingTensor& base() const noexcept { return base_; }
  const Field& field() const noexcept { return base_.field(); }
  std::size_t dim_v() const noexcept { return v_; }
  std::size_t dim_w() const noexcept { return w_; }
  const Matrix& Tprime() const noexcept { return Tprime_; }
  const std::vector<Matrix>& rho1() const noexcept { return rho1_; }
  const std::vector<Matrix>& rho2() const noexcept { return rho2_; }
  const std::vector<Matrix>& rho3() const noexcept { return rho3_; }
  CochainShape shape() const;

  Matrix rho1_at(const Vector& x) const;
  Matrix rho2_at(const Vector& x) const;
  /// rho3(m) for a module vector m.
  Matrix rho3_at(const Vector& m) const;

  friend bool operator==(const EtRepresentation&, const EtRepresentation&) = default;

 private:
  EmbeddingTensor base_;
  std::size_t v_;
  std::size_t w_;
  Matrix Tprime_;
  std::vector<Matrix> rho1_;
  std::vector<Matrix> rho2_;
  std::vector<Matrix> rho3_;
};

/// Seven verdicts: rho1_representation, rho2_representation, equivariance
/// (T' rho1(x) = rho2(x) T'), image_compatibility
/// (T' rho3(m) T'v = rho2(T m) T'v on a basis of im T'), and the three
/// compatibilities between rho1, rho2, rho3 and rho (compatibility_1..3).
/// With Preconditions::Verify, throws NotAnEmbeddingTensor unless the base
/// passes check_embedding_tensor.
VerificationReport check_et_representation(const EtRepresentation& er,
                                           Preconditions pre = Preconditions::Verify);

/// The embedding tensor of the abelian extension defined by z, on
/// (M + V, g + W):
///   T^(m+v) = T m + theta(m) + T'v
///   [x+w, y+w'] = [x,y] + omega(x,y) + rho2(x)w' - rho2(y)w
///   rho^(x+w)(m+v) = rho(x)m + nu(x,m) + rho1(x)v - rho3(m)w
/// No axioms are checked.
EmbeddingTensor twisted_semidirect(const EtRepresentation& er, const TwoCochain& z);

/// twisted_semidirect with z = 0. Throws InvalidEtRepresentation unless
/// check_et_representation passes.
EmbeddingTensor semidirect_et(const EtRepresentation& er);

/// All-zero coefficients of the given dimensions.
EtRepresentation zero_coefficients(const EmbeddingTensor& base, std::size_t v, std::size_t w);

}  // namespace malcev
