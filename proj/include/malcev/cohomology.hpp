#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "malcev/cochain.hpp"
#include "malcev/et_representation.hpp"

namespace malcev {

struct CohomologyOptions {
  /// Use the alternative term order in the Sagle-type cocycle condition
  /// ([[z,t],y],x in place of [[z,t],x],y) and, where they typecheck, the
  /// rho1 / rho2 variants of the coboundary's omega and nu parts.
  bool strict_printed = false;
  /// Verify the coefficient axioms before computing. Off for the adjoint
  /// coefficients, which need not satisfy them.
  bool verify_coefficients = true;
};

/// V = M, W = g, T' = T, rho1 = rho, rho2 = ad, rho3(m)(x) = -rho(x)(m).
EtRepresentation adjoint_coefficients(const EmbeddingTensor& et);

/// Three verdicts on basis tuples:
///   tensor_cocycle (m, n):
///     rho2(Tm)theta(n) - rho2(Tn)theta(m) + omega(Tm,Tn) - T'nu(Tm,n)
///     - theta(rho(Tm)n) + T'rho3(n)theta(m) = 0
///   bracket_cocycle (x, y, z, t):
///     rho2([x,z])omega(y,t) - rho2([y,t])omega(x,z) + omega([x,z],[y,t])
///     + sum over (a,b,c,d) in the cyclic shifts of (x,y,z,t) of
///       rho2(d)omega([a,b],c) - rho2(d)rho2(c)omega(a,b) - omega([[a,b],c],d) = 0
///   action_cocycle (x, y, z, m): the Malcev representation law of the
///     twisted action, linearised in (omega, nu).
/// Throws InvalidEtRepresentation if verification is requested and fails,
/// ShapeError if z does not match.
VerificationReport is_cocycle(const EtRepresentation& er, const TwoCochain& z,
                              const CohomologyOptions& options = {});

/// D(b0, b1):
///   theta(m)   = T'b0(m) - b1(Tm)
///   omega(x,y) = rho2(x)b1(y) - rho2(y)b1(x) - b1([x,y])
///   nu(x,m)    = rho1(x)b0(m) - rho3(m)b1(x) - b0(rho(x)m)
/// In strict mode the omega part uses rho1 in place of rho2 when v = w, and
/// the nu part uses rho2(m) in place of rho3(m) when additionally m = n;
/// otherwise those variants do not typecheck and the default is used.
TwoCochain coboundary(const EtRepresentation& er, const OneCochain& b,
                      const CohomologyOptions& options = {});

/// Which strict variants apply for this shape, one line each.
std::vector<std::string> strict_variant_notes(const CochainShape& s);

/// Rows: every cocycle condition on every basis tuple (zero and repeated
/// rows dropped); columns: two-cochain coordinates.
Matrix cocycle_constraints(const EtRepresentation& er, const CohomologyOptions& options = {});
/// Columns: D applied to the unit one-cochains.
Matrix coboundary_matrix(const EtRepresentation& er, const CohomologyOptions& options = {});
std::vector<TwoCochain> cocycle_space(const EtRepresentation& er,
                                      const CohomologyOptions& options = {});

struct H2Result {
  std::size_t cochain_dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_rank = 0;
  /// rank [D | Z] - rank D; equals cocycle_dim - coboundary_rank whenever
  /// the coboundaries are cocycles.
  std::size_t dimension = 0;
  bool coboundaries_are_cocycles = true;
  std::vector<TwoCochain> cocycle_basis;
  /// Cocycle basis vectors completing a basis of the coboundaries.
  std::vector<TwoCochain> representatives;
  std::vector<std::string> notes;
};

/// Throws InternalInconsistency if some coboundary fails the cocycle
/// conditions, unless strict_printed is set (then the failure is reported).
H2Result h2(const EtRepresentation& er, const CohomologyOptions& options = {});

/// An extension of a base tensor: hat on (M^, g^), with V -> M^ -> M and
/// W -> g^ -> g.
struct Extension {
  EmbeddingTensor hat;
  Matrix i0;
  Matrix i1;
  Matrix p0;
  Matrix p1;
};

/// Sections of p0 and p1.
struct Splitting {
  Matrix sigma0;
  Matrix sigma1;
};

/// Axioms of the hat tensor, exactness at both levels, (p0, p1) a morphism
/// onto the base, and abelian kernel data.
VerificationReport validate_extension(const EmbeddingTensor& base, const Extension& ext);

/// Block extension on (M + V, g + W) twisted by z, with the canonical
/// inclusions and projections. Throws NotACocycle unless z passes
/// is_cocycle (when verify_coefficients is set, also the coefficient checks).
Extension extension_from_cocycle(const EtRepresentation& er, const TwoCochain& z,
                                 const CohomologyOptions& options = {});

/// sigma0 = [I; 0], sigma1 = [I; 0].
Splitting canonical_splitting(const CochainShape& s, const Field& f);

/// theta(m) = T^ sigma0(m) - sigma1(Tm), omega(x,y) = [sigma1 x, sigma1 y] - sigma1[x,y],
/// nu(x,m) = rho^(sigma1 x)sigma0(m) - sigma0(rho(x)m), read back through i1 and i0.
/// Throws InvalidSplitting if p o sigma is not the identity, InvalidExtension
/// if a value leaves the kernel.
TwoCochain cocycle_from_splitting(const EmbeddingTensor& base, const Extension& ext,
                                  const Splitting& s);

/// The coefficients an extension induces through a splitting:
/// rho1(x)v = rho^(sigma1 x)v, rho2(x)w = [sigma1 x, w], rho3(m)w = -rho^(w)sigma0(m),
/// and T' the restriction of T^.
EtRepresentation induced_coefficients(const EmbeddingTensor& base, const Extension& ext,
                                      const Splitting& s);

/// b with D(b) = z1 - z2, or nullopt. Throws NotACocycle if either input
/// fails is_cocycle.
std::optional<OneCochain> extensions_equivalent(const EtRepresentation& er, const TwoCochain& z1,
                                                const TwoCochain& z2,
                                                const CohomologyOptions& options = {});

}  // namespace malcev
