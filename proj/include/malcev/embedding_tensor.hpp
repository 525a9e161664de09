#pragma once

#include "malcev/algebra.hpp"
#include "malcev/representation.hpp"

namespace malcev {

/// A representation together with T: M -> g; column k of T holds T(f_k).
class EmbeddingTensor {
 public:
  /// Throws ShapeError unless T is n x m, FieldMismatch on foreign entries.
  EmbeddingTensor(Representation rep, Matrix T);

  const Representation& rep() const noexcept { return rep_; }
  const AlgebraData& algebra() const noexcept { return rep_.algebra(); }
  const Field& field() const noexcept { return rep_.field(); }
  std::size_t algebra_dim() const noexcept { return rep_.algebra_dim(); }
  std::size_t module_dim() const noexcept { return rep_.module_dim(); }
  const Matrix& T() const noexcept { return T_; }

  friend bool operator==(const EmbeddingTensor&, const EmbeddingTensor&) = default;

 private:
  Representation rep_;
  Matrix T_;
};

/// [T m, T n] = T(rho(T m) n) on module basis pairs. With
/// Preconditions::Verify, throws UnverifiedRepresentation unless the
/// representation passes its checks.
VerificationReport check_embedding_tensor(const EmbeddingTensor& et,
                                          Preconditions pre = Preconditions::Verify);

/// Non-skew bracket on g + M: [x+m, y+n]_H = [x,y] + rho(x)n.
/// Throws UnverifiedRepresentation unless the representation checks pass.
AlgebraData hemi_semidirect(const Representation& r);

/// Whether the graph {(T m, m)} is closed under the hemi-semidirect bracket.
bool graph_subalgebra_check(const EmbeddingTensor& et,
                            Preconditions pre = Preconditions::Verify);

enum class Side { Left, Right };

/// Bracket on M: [m,n] = rho(T m)n (Left) or rho(T n)m (Right).
/// Throws NotAnEmbeddingTensor unless check_embedding_tensor passes.
AlgebraData induce_dialgebra(const EmbeddingTensor& et, Side side);

}  // namespace malcev
