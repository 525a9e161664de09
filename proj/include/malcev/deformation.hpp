#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "malcev/cohomology.hpp"

namespace malcev {

/// A deformation triple (theta, omega, nu) is a two-cochain with adjoint
/// shape: theta: M -> g, omega: g ^ g -> g, nu(x, -): M -> M.
using DeformationTriple = TwoCochain;

CochainShape adjoint_shape(const EmbeddingTensor& et);

/// Conditions for T + l theta, [,] + l omega, rho + l nu to form an
/// embedding tensor, grouped by the power of l they come from:
///   order 1: tensor_order1, bracket_order1, action_order1 (the cocycle group)
///   order 2: tensor_order2, bracket_order2, action_order2
///   order 3: tensor_order3, bracket_order3, action_order3
struct DeformationReport {
  VerificationReport order1{"order 1"};
  VerificationReport order2{"order 2"};
  VerificationReport order3{"order 3"};

  bool passed() const { return order1.passed() && order2.passed() && order3.passed(); }
  std::string to_text() const;
};

/// Throws NotAnEmbeddingTensor if verification is requested and fails,
/// ShapeError if d does not have adjoint shape.
DeformationReport check_first_order(const EmbeddingTensor& et, const DeformationTriple& d,
                                    Preconditions pre = Preconditions::Verify);

/// Terms 1..L of T_l, omega_l, nu_l; term 0 is the base structure.
struct FormalDeformation {
  std::vector<DeformationTriple> terms;
  std::size_t order() const { return terms.size(); }
};

/// Coefficient lists indexed by the power of the formal parameter,
/// index 0 being the base structure.
struct DeformedStructure {
  std::vector<Matrix> tensor;
  std::vector<AlgebraData> bracket;
  std::vector<std::vector<Matrix>> action;

  std::size_t order() const { return tensor.empty() ? 0 : tensor.size() - 1; }
};

DeformedStructure deform(const EmbeddingTensor& et, const FormalDeformation& f);

/// For each degree l = 0..3L, the coefficient of l^l in the Sagle identity
/// of the deformed bracket (sagle_series), the representation law of the
/// deformed action (representation_series) and the embedding tensor
/// identity (tensor_series), each summed over i + j + k = l.
struct FormalReport {
  std::vector<VerificationReport> degrees;
  bool passed() const;
  std::string to_text() const;
};

FormalReport check_formal(const EmbeddingTensor& et, const FormalDeformation& f);

struct NijenhuisPair {
  Matrix N0;
  Matrix N1;
};

/// kernel_condition: N1 kills the image of T N0 - N1 T (checked on an rref
/// basis of the image); bracket_condition: N1[x,y]_N = [N1 x, N1 y];
/// action_condition: N0[x,m]_N = [N1 x, N0 m], where
/// [x,y]_N = [N1 x,y] + [x,N1 y] - N1[x,y] and
/// [x,m]_N = rho(N1 x)m + rho(x)N0 m - N0 rho(x)m.
VerificationReport is_nijenhuis(const EmbeddingTensor& et, const NijenhuisPair& N);

/// The adjoint coboundary D(N0, N1):
/// theta = T N0 - N1 T, omega = [,]_N, nu = [,]_N.
/// Throws NotNijenhuis unless is_nijenhuis passes.
DeformationTriple nijenhuis_to_deformation(const EmbeddingTensor& et, const NijenhuisPair& N);

/// D(phi, psi) with adjoint coefficients.
DeformationTriple adjoint_coboundary(const EmbeddingTensor& et, const Matrix& phi, const Matrix& psi);

/// (id + l N0, id + l N1) as a morphism from the deformed structure back
/// to the base, coefficient by coefficient:
///   tensor_order1:  T N0 = N1 T + theta        tensor_order2:  N1 theta = 0
///   bracket_order1: N1[x,y] + omega(x,y) = [N1 x,y] + [x,N1 y]
///   bracket_order2: N1 omega(x,y) = [N1 x, N1 y]
///   action_order1:  N0 rho(x)m + nu(x,m) = rho(N1 x)m + rho(x)N0 m
///   action_order2:  N0 nu(x,m) = rho(N1 x)N0 m
/// and the constraints these force on N alone (tensor_constraint,
/// bracket_constraint, action_constraint).
VerificationReport check_trivial_morphism(const EmbeddingTensor& et, const DeformationTriple& d,
                                          const NijenhuisPair& N);

/// d1 - d2 == D(phi1, psi1) with adjoint coefficients, exactly.
bool first_order_cohomologous(const EmbeddingTensor& et, const DeformationTriple& d1,
                              const DeformationTriple& d2, const Matrix& phi1, const Matrix& psi1);

struct RigidityReport {
  H2Result cohomology;
  /// True when H^2 with adjoint coefficients vanishes. A nonzero H^2 leaves
  /// rigidity undecided.
  bool rigid = false;
  std::string to_text() const;
};

RigidityReport rigidity_report(const EmbeddingTensor& et);

}  // namespace malcev
