#include "malcev/embedding_tensor.hpp"

#include <string>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

EmbeddingTensor::EmbeddingTensor(Representation rep, Matrix T)
    : rep_(std::move(rep)), T_(std::move(T)) {
  if (T_.rows() != rep_.algebra_dim() || T_.cols() != rep_.module_dim())
    throw Error(ErrorCode::ShapeError, "T must be " + std::to_string(rep_.algebra_dim()) + "x" +
                                           std::to_string(rep_.module_dim()));
  if (T_.field() != rep_.field())
    throw Error(ErrorCode::FieldMismatch, "T over a different field");
  T_.validate();
}

VerificationReport check_embedding_tensor(const EmbeddingTensor& et, Preconditions pre) {
  if (pre == Preconditions::Verify && !check_representation(et.rep()).passed())
    throw Error(ErrorCode::UnverifiedRepresentation, "the action fails the representation law");
  const std::size_t m = et.module_dim();
  const Field& f = et.field();
  CheckResult c("embedding_tensor");
  for (std::size_t a = 0; a < m; ++a) {
    const Vector ta = et.T().column(a);
    const Matrix act = et.rep().action(ta);
    for (std::size_t b = 0; b < m; ++b)
      c.expect_equal({a, b}, bracket(et.algebra(), ta, et.T().column(b)),
                     et.T().apply(act.apply(unit_vector(f, m, b))));
  }
  VerificationReport r("embedding tensor");
  r.add(std::move(c));
  return r;
}

namespace {

AlgebraData hemi_unchecked(const Representation& r) {
  const Field& f = r.field();
  const std::size_t n = r.algebra_dim(), m = r.module_dim(), d = n + m;
  std::vector<BracketEntry> entries;
  for (const auto& e : r.algebra().entries()) {
    Vector c = zero_vector(f, d), neg = zero_vector(f, d);
    for (std::size_t k = 0; k < n; ++k) {
      c[k] = e.coeffs[k];
      neg[k] = -e.coeffs[k];
    }
    entries.push_back({e.i, e.j, std::move(c)});
    entries.push_back({e.j, e.i, std::move(neg)});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      Vector c = zero_vector(f, d);
      for (std::size_t r2 = 0; r2 < m; ++r2) c[n + r2] = r.rho()[i].at(r2, k);
      if (!is_zero(c)) entries.push_back({i, n + k, std::move(c)});
    }
  return AlgebraData::general(f, d, entries);
}

}  // namespace

AlgebraData hemi_semidirect(const Representation& r) {
  if (!check_representation(r).passed())
    throw Error(ErrorCode::UnverifiedRepresentation, "the action fails the representation law");
  return hemi_unchecked(r);
}

bool graph_subalgebra_check(const EmbeddingTensor& et, Preconditions pre) {
  if (pre == Preconditions::Verify && !check_representation(et.rep()).passed())
    throw Error(ErrorCode::UnverifiedRepresentation, "the action fails the representation law");
  const AlgebraData h = hemi_unchecked(et.rep());
  const Field& f = et.field();
  const std::size_t n = et.algebra_dim(), m = et.module_dim();
  auto graph_point = [&](std::size_t k) {
    Vector p = zero_vector(f, n + m);
    const Vector t = et.T().column(k);
    for (std::size_t i = 0; i < n; ++i) p[i] = t[i];
    p[n + k] = Scalar::one(f);
    return p;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector u = bracket(h, graph_point(a), graph_point(b));
      const Vector g_part(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
      const Vector m_part(u.begin() + static_cast<std::ptrdiff_t>(n), u.end());
      if (g_part != et.T().apply(m_part)) return false;
    }
  return true;
}

AlgebraData induce_dialgebra(const EmbeddingTensor& et, Side side) {
  if (!check_embedding_tensor(et).passed())
    throw Error(ErrorCode::NotAnEmbeddingTensor, "T fails the embedding tensor identity");
  const Field& f = et.field();
  const std::size_t m = et.module_dim();
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector c = side == Side::Left
                     ? et.rep().act(et.T().column(a), unit_vector(f, m, b))
                     : et.rep().act(et.T().column(b), unit_vector(f, m, a));
      if (!is_zero(c)) entries.push_back({a, b, std::move(c)});
    }
  return AlgebraData::general(f, m, entries);
}

}  // namespace malcev
