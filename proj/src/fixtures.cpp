#include "malcev/fixtures.hpp"

#include "malcev/cohomology.hpp"

namespace malcev::fixtures {

namespace {

Vector ints(const Field& f, std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.push_back(Scalar::from_int(f, x));
  return v;
}

Matrix matrix(const Field& f, std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> r;
  for (auto row : rows) r.push_back(ints(f, row));
  return Matrix::from_rows(f, cols, r);
}

}  // namespace

AlgebraData abelian(const Field& f, std::size_t n) { return AlgebraData::abelian(f, n); }

AlgebraData aff1(const Field& f) { return AlgebraData::skew(f, 2, {{0, 1, ints(f, {0, 1})}}); }

AlgebraData sl2(const Field& f) {
  return AlgebraData::skew(f, 3,
                           {{0, 1, ints(f, {0, 2, 0})}, {0, 2, ints(f, {0, 0, -2})}, {1, 2, ints(f, {1, 0, 0})}});
}

AlgebraData m7(const Field& f) {
  static const std::size_t lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                          {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  std::vector<BracketEntry> entries;
  for (const auto& l : lines)
    for (int r = 0; r < 3; ++r) {
      const std::size_t i = l[r] - 1, j = l[(r + 1) % 3] - 1, k = l[(r + 2) % 3] - 1;
      Vector c = zero_vector(f, 7);
      c[k] = Scalar::from_int(f, 2);
      entries.push_back({i, j, std::move(c)});
    }
  return AlgebraData::skew(f, 7, entries);
}

Representation aff1_line(const Field& f) {
  return Representation(aff1(f), 1, {matrix(f, 1, {{1}}), matrix(f, 1, {{0}})});
}

EmbeddingTensor identity_on_adjoint(const AlgebraData& a) {
  return EmbeddingTensor(adjoint_rep(a), Matrix::identity(a.field(), a.dim()));
}

EmbeddingTensor zero_tensor(const Representation& r) {
  return EmbeddingTensor(r, Matrix(r.field(), r.algebra_dim(), r.module_dim()));
}

EmbeddingTensor aff1_line_tensor(const Field& f) {
  return EmbeddingTensor(aff1_line(f), matrix(f, 1, {{0}, {1}}));
}

EtRepresentation aff1_line_coefficients(const Field& f) {
  const Representation line = aff1_line(f);
  return EtRepresentation(aff1_line_tensor(f), 1, 1, matrix(f, 1, {{1}}), line.rho(), line.rho(),
                          {matrix(f, 1, {{0}})});
}

EtRepresentation fully_abelian(const Field& f) {
  return zero_coefficients(zero_tensor(trivial_rep(abelian(f, 2), 2)), 1, 1);
}

std::vector<NamedAlgebra> algebras(const Field& f) {
  std::vector<NamedAlgebra> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"abelian" + std::to_string(n), abelian(f, n)});
  out.push_back({"aff1", aff1(f)});
  out.push_back({"sl2", sl2(f)});
  out.push_back({"m7", m7(f)});
  return out;
}

std::vector<std::pair<std::string, Representation>> representations(const Field& f) {
  std::vector<std::pair<std::string, Representation>> out;
  out.emplace_back("abelian2_trivial2", trivial_rep(abelian(f, 2), 2));
  out.emplace_back("aff1_adjoint", adjoint_rep(aff1(f)));
  out.emplace_back("aff1_line", aff1_line(f));
  out.emplace_back("aff1_trivial1", trivial_rep(aff1(f), 1));
  out.emplace_back("sl2_adjoint", adjoint_rep(sl2(f)));
  out.emplace_back("sl2_trivial1", trivial_rep(sl2(f), 1));
  out.emplace_back("m7_adjoint", adjoint_rep(m7(f)));
  return out;
}

std::vector<NamedTensor> tensors(const Field& f) {
  std::vector<NamedTensor> out;
  out.push_back({"abelian2_zero", zero_tensor(trivial_rep(abelian(f, 2), 2))});
  out.push_back({"aff1_adjoint_zero", zero_tensor(adjoint_rep(aff1(f)))});
  out.push_back({"aff1_adjoint_identity", identity_on_adjoint(aff1(f))});
  out.push_back({"aff1_line", aff1_line_tensor(f)});
  out.push_back({"sl2_adjoint_identity", identity_on_adjoint(sl2(f))});
  out.push_back({"sl2_adjoint_zero", zero_tensor(adjoint_rep(sl2(f)))});
  return out;
}

std::vector<NamedCoefficients> coefficient_systems(const Field& f) {
  std::vector<NamedCoefficients> out;
  out.push_back({"fully_abelian", fully_abelian(f), true});
  out.push_back({"aff1_line", aff1_line_coefficients(f), true});
  out.push_back({"aff1_line_zero", zero_coefficients(aff1_line_tensor(f), 1, 1), true});
  out.push_back({"aff1_adjoint_zero_adjoint", adjoint_coefficients(zero_tensor(adjoint_rep(aff1(f)))), false});
  out.push_back({"aff1_adjoint_identity_adjoint", adjoint_coefficients(identity_on_adjoint(aff1(f))), false});
  out.push_back({"sl2_adjoint_identity_adjoint", adjoint_coefficients(identity_on_adjoint(sl2(f))), false});
  return out;
}

}  // namespace malcev::fixtures
