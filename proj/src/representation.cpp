#include "malcev/representation.hpp"

#include <string>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

Representation::Representation(AlgebraData algebra, std::size_t module_dim,
                               std::vector<Matrix> rho)
    : algebra_(std::move(algebra)), module_dim_(module_dim), rho_(std::move(rho)) {
  if (!algebra_.is_skew())
    throw Error(ErrorCode::NonSkewInput, "a representation needs a skew-symmetric algebra");
  if (rho_.size() != algebra_.dim())
    throw Error(ErrorCode::ShapeError, "expected " + std::to_string(algebra_.dim()) +
                                           " action matrices, got " + std::to_string(rho_.size()));
  for (std::size_t i = 0; i < rho_.size(); ++i) {
    if (rho_[i].rows() != module_dim_ || rho_[i].cols() != module_dim_)
      throw Error(ErrorCode::ShapeError, "action matrix " + std::to_string(i) + " must be " +
                                             std::to_string(module_dim_) + "x" +
                                             std::to_string(module_dim_));
    if (rho_[i].field() != algebra_.field())
      throw Error(ErrorCode::FieldMismatch, "action matrix over a different field");
    rho_[i].validate();
  }
}

Matrix Representation::action(const Vector& x) const {
  if (x.size() != algebra_.dim())
    throw Error(ErrorCode::ShapeError, "algebra vector of wrong length");
  Matrix out(field(), module_dim_, module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * rho_[i];
  return out;
}

Vector Representation::act(const Vector& x, const Vector& m) const {
  if (x.size() != algebra_.dim() || m.size() != module_dim_)
    throw Error(ErrorCode::ShapeError, "action arguments of wrong length");
  Vector out = zero_vector(field(), module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) axpy(out, x[i], rho_[i].apply(m));
  return out;
}

Vector flatten(const Matrix& m) { return m.entries(); }

VerificationReport check_representation(const Representation& r, Preconditions pre) {
  const AlgebraData& a = r.algebra();
  if (pre == Preconditions::Verify && !is_malcev(a))
    throw Error(ErrorCode::UnverifiedAlgebra, "the algebra fails the Malcev identity");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const auto& rho = r.rho();
  CheckResult c("representation_law");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vector ez = unit_vector(f, n, z);
        Matrix lhs = r.action(bracket(a, a.product(x, y), ez));
        Matrix rhs = rho[x] * rho[y] * rho[z];
        rhs -= rho[z] * rho[x] * rho[y];
        rhs += rho[y] * r.action(a.product(z, x));
        rhs -= r.action(a.product(y, z)) * rho[x];
        c.expect_equal({x, y, z}, flatten(lhs), flatten(rhs));
      }
  VerificationReport rep("representation");
  rep.add(std::move(c));
  return rep;
}

Representation adjoint_rep(const AlgebraData& a) {
  if (!is_malcev(a))
    throw Error(ErrorCode::UnverifiedAlgebra, "the algebra fails the Malcev identity");
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < a.dim(); ++i)
    rho.push_back(a.left_multiplication(unit_vector(a.field(), a.dim(), i)));
  return Representation(a, a.dim(), std::move(rho));
}

Representation trivial_rep(const AlgebraData& a, std::size_t module_dim) {
  return Representation(a, module_dim,
                        std::vector<Matrix>(a.dim(), Matrix(a.field(), module_dim, module_dim)));
}

AlgebraData semidirect_malcev(const Representation& r) {
  if (!check_representation(r).passed())
    throw Error(ErrorCode::UnverifiedRepresentation, "the action fails the representation law");
  const Field& f = r.field();
  const std::size_t n = r.algebra_dim(), m = r.module_dim(), d = n + m;
  std::vector<BracketEntry> entries;
  for (const auto& e : r.algebra().entries()) {
    Vector c = zero_vector(f, d);
    for (std::size_t k = 0; k < n; ++k) c[k] = e.coeffs[k];
    entries.push_back({e.i, e.j, std::move(c)});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      Vector c = zero_vector(f, d);
      for (std::size_t r2 = 0; r2 < m; ++r2) c[n + r2] = r.rho()[i].at(r2, k);
      if (!is_zero(c)) entries.push_back({i, n + k, std::move(c)});
    }
  return AlgebraData::skew(f, d, entries);
}

}  // namespace malcev
