#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "malcev/et_representation.hpp"

namespace malcev::fixtures {

/// Zero bracket on an n-dimensional space.
AlgebraData abelian(const Field& f, std::size_t n);
/// Basis (e_1, e_2), [e_1, e_2] = e_2.
AlgebraData aff1(const Field& f);
/// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
AlgebraData sl2(const Field& f);
/// The traceless octonions under the commutator: [e_i, e_j] = 2 e_k for
/// each oriented line (i, j, k) of the multiplication table.
AlgebraData m7(const Field& f);

/// aff(1) acting on a line by rho(e_1) = 1, rho(e_2) = 0.
Representation aff1_line(const Field& f);

/// T = identity on the adjoint representation.
EmbeddingTensor identity_on_adjoint(const AlgebraData& a);
/// T = 0 on the given representation.
EmbeddingTensor zero_tensor(const Representation& r);
/// aff1_line with T(f) = e_2.
EmbeddingTensor aff1_line_tensor(const Field& f);

/// V = W = line over aff1_line_tensor: rho1 = rho2 = the line action,
/// T' = 1, rho3 = 0.
EtRepresentation aff1_line_coefficients(const Field& f);
/// Everything zero: n = m = 2, v = w = 1.
EtRepresentation fully_abelian(const Field& f);

struct NamedAlgebra {
  std::string name;
  AlgebraData algebra;
};
struct NamedTensor {
  std::string name;
  EmbeddingTensor tensor;
};
struct NamedCoefficients {
  std::string name;
  EtRepresentation coefficients;
  /// False for the adjoint coefficients, which need not satisfy the axioms.
  bool verified;
};

/// abelian(1..4), aff1, sl2, m7.
std::vector<NamedAlgebra> algebras(const Field& f);
/// Representations used throughout the tests: trivial, adjoint and the aff(1) line.
std::vector<std::pair<std::string, Representation>> representations(const Field& f);
std::vector<NamedTensor> tensors(const Field& f);
std::vector<NamedCoefficients> coefficient_systems(const Field& f);

}  // namespace malcev::fixtures
