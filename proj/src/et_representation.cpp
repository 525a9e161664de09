#include "malcev/et_representation.hpp"

#include <string>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

namespace {

void require_shape(const Matrix& a, std::size_t rows, std::size_t cols, const Field& f,
                   const std::string& what) {
  if (a.rows() != rows || a.cols() != cols)
    throw Error(ErrorCode::ShapeError,
                what + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
  if (a.field() != f) throw Error(ErrorCode::FieldMismatch, what + " over a different field");
  a.validate();
}

void require_list(const std::vector<Matrix>& list, std::size_t count, std::size_t rows,
                  std::size_t cols, const Field& f, const std::string& what) {
  if (list.size() != count)
    throw Error(ErrorCode::ShapeError,
                what + " needs " + std::to_string(count) + " matrices, got " +
                    std::to_string(list.size()));
  for (std::size_t i = 0; i < count; ++i)
    require_shape(list[i], rows, cols, f, what + "[" + std::to_string(i) + "]");
}

Matrix combine(const Field& f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& list,
               const Vector& x) {
  if (x.size() != list.size()) throw Error(ErrorCode::ShapeError, "argument of wrong length");
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * list[i];
  return out;
}

}  // namespace

EtRepresentation::EtRepresentation(EmbeddingTensor base, std::size_t v, std::size_t w,
                                   Matrix Tprime, std::vector<Matrix> rho1,
                                   std::vector<Matrix> rho2, std::vector<Matrix> rho3)
    : base_(std::move(base)), v_(v), w_(w), Tprime_(std::move(Tprime)), rho1_(std::move(rho1)),
      rho2_(std::move(rho2)), rho3_(std::move(rho3)) {
  const Field& f = base_.field();
  const std::size_t n = base_.algebra_dim(), m = base_.module_dim();
  require_shape(Tprime_, w_, v_, f, "T'");
  require_list(rho1_, n, v_, v_, f, "rho1");
  require_list(rho2_, n, w_, w_, f, "rho2");
  require_list(rho3_, m, v_, w_, f, "rho3");
}

CochainShape EtRepresentation::shape() const {
  return {base_.algebra_dim(), base_.module_dim(), v_, w_};
}

Matrix EtRepresentation::rho1_at(const Vector& x) const {
  return combine(field(), v_, v_, rho1_, x);
}
Matrix EtRepresentation::rho2_at(const Vector& x) const {
  return combine(field(), w_, w_, rho2_, x);
}
Matrix EtRepresentation::rho3_at(const Vector& m) const {
  return combine(field(), v_, w_, rho3_, m);
}

VerificationReport check_et_representation(const EtRepresentation& er, Preconditions pre) {
  const EmbeddingTensor& et = er.base();
  if (pre == Preconditions::Verify && !check_embedding_tensor(et).passed())
    throw Error(ErrorCode::NotAnEmbeddingTensor, "the base fails the embedding tensor identity");
  const Field& f = er.field();
  const AlgebraData& g = et.algebra();
  const std::size_t n = et.algebra_dim(), m = et.module_dim();
  const auto& rho1 = er.rho1();
  const auto& rho2 = er.rho2();
  const auto& rho3 = er.rho3();
  const Matrix& Tp = er.Tprime();
  auto rho = [&](std::size_t i) -> const Matrix& { return et.rep().rho()[i]; };

  VerificationReport report("ET-representation");
  {
    CheckResult c = check_representation(Representation(g, er.dim_v(), rho1), Preconditions::Assume)
                        .checks()
                        .front();
    c.name = "rho1_representation";
    report.add(std::move(c));
  }
  {
    CheckResult c = check_representation(Representation(g, er.dim_w(), rho2), Preconditions::Assume)
                        .checks()
                        .front();
    c.name = "rho2_representation";
    report.add(std::move(c));
  }

  CheckResult equi("equivariance");
  for (std::size_t i = 0; i < n; ++i)
    equi.expect_equal({i}, flatten(Tp * rho1[i]), flatten(rho2[i] * Tp));
  report.add(std::move(equi));

  CheckResult image("image_compatibility");
  const auto pivots = rref(Tp).pivot_cols;
  for (std::size_t k = 0; k < m; ++k) {
    const Matrix r2 = er.rho2_at(et.T().column(k));
    for (std::size_t c : pivots) {
      const Vector u = Tp.column(c);
      image.expect_equal({k, c}, Tp.apply(rho3[k].apply(u)), r2.apply(u));
    }
  }
  image.notes.push_back("evaluated on the pivot columns of T' (a basis of its image)");
  report.add(std::move(image));

  CheckResult c1("compatibility_1"), c2("compatibility_2"), c3("compatibility_3");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector xy = g.product(x, y);
      const Matrix rho1_xy = er.rho1_at(xy);
      const Matrix rho2_xy = er.rho2_at(xy);
      const Matrix rho_xy = et.rep().action(xy);
      for (std::size_t k = 0; k < m; ++k) {
        const Vector fk = unit_vector(f, m, k);
        const Matrix& r3 = rho3[k];
        const Vector xm = rho(x).apply(fk), ym = rho(y).apply(fk);

        Matrix e1 = r3 * rho2[x] * rho2[y];
        e1 -= rho1[x] * rho1[y] * r3;
        e1 += rho1[y] * er.rho3_at(xm);
        e1 += er.rho3_at(ym) * rho2[x];
        e1 += er.rho3_at(rho_xy.apply(fk));
        c1.expect_zero({x, y, k}, flatten(e1));

        Matrix e2 = r3 * rho2_xy;
        e2 -= rho1[x] * rho1[y] * r3;
        e2 += er.rho3_at(rho(x).apply(ym));
        e2 += rho1[y] * r3 * rho2[x];
        e2 += er.rho3_at(xm) * rho2[y];
        c2.expect_zero({x, y, k}, flatten(e2));

        Matrix e3 = r3 * rho2[x] * rho2[y];
        e3 -= er.rho3_at(rho(y).apply(xm));
        e3 += rho1[x] * er.rho3_at(ym);
        e3 -= rho1[y] * r3 * rho2[x];
        e3 -= rho1_xy * r3;
        c3.expect_zero({x, y, k}, flatten(e3));
      }
    }
  report.add(std::move(c1));
  report.add(std::move(c2));
  report.add(std::move(c3));
  return report;
}

EmbeddingTensor twisted_semidirect(const EtRepresentation& er, const TwoCochain& z) {
  const EmbeddingTensor& et = er.base();
  const Field& f = er.field();
  const CochainShape s = er.shape();
  if (!(z.shape() == s)) throw Error(ErrorCode::ShapeError, "cochain shape does not match");
  if (z.field() != f) throw Error(ErrorCode::FieldMismatch, "cochain over a different field");
  const std::size_t n = s.n, m = s.m, v = s.v, w = s.w;
  const std::size_t gd = n + w, md = m + v;

  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector c = zero_vector(f, gd);
      const Vector& base = et.algebra().product(i, j);
      const Vector om = z.omega(i, j);
      for (std::size_t k = 0; k < n; ++k) c[k] = base[k];
      for (std::size_t k = 0; k < w; ++k) c[n + k] = om[k];
      if (!is_zero(c)) entries.push_back({i, j, std::move(c)});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < w; ++l) {
      Vector c = zero_vector(f, gd);
      for (std::size_t k = 0; k < w; ++k) c[n + k] = er.rho2()[i].at(k, l);
      if (!is_zero(c)) entries.push_back({i, n + l, std::move(c)});
    }
  AlgebraData hat_g = AlgebraData::skew(f, gd, entries);

  std::vector<Matrix> hat_rho(gd, Matrix(f, md, md));
  for (std::size_t i = 0; i < n; ++i) {
    Matrix& a = hat_rho[i];
    const Matrix& r = et.rep().rho()[i];
    for (std::size_t col = 0; col < m; ++col) {
      for (std::size_t row = 0; row < m; ++row) a.at(row, col) = r.at(row, col);
      for (std::size_t row = 0; row < v; ++row) a.at(m + row, col) = z.nu()[i].at(row, col);
    }
    for (std::size_t col = 0; col < v; ++col)
      for (std::size_t row = 0; row < v; ++row) a.at(m + row, m + col) = er.rho1()[i].at(row, col);
  }
  for (std::size_t l = 0; l < w; ++l) {
    Matrix& a = hat_rho[n + l];
    for (std::size_t col = 0; col < m; ++col)
      for (std::size_t row = 0; row < v; ++row) a.at(m + row, col) = -er.rho3()[col].at(row, l);
  }

  Matrix hat_T(f, gd, md);
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t row = 0; row < n; ++row) hat_T.at(row, col) = et.T().at(row, col);
    for (std::size_t row = 0; row < w; ++row) hat_T.at(n + row, col) = z.theta().at(row, col);
  }
  for (std::size_t col = 0; col < v; ++col)
    for (std::size_t row = 0; row < w; ++row) hat_T.at(n + row, m + col) = er.Tprime().at(row, col);

  return EmbeddingTensor(Representation(std::move(hat_g), md, std::move(hat_rho)), std::move(hat_T));
}

EmbeddingTensor semidirect_et(const EtRepresentation& er) {
  if (!check_et_representation(er).passed())
    throw Error(ErrorCode::InvalidEtRepresentation, "the coefficients fail their axioms");
  return twisted_semidirect(er, TwoCochain::zero(er.field(), er.shape()));
}

EtRepresentation zero_coefficients(const EmbeddingTensor& base, std::size_t v, std::size_t w) {
  const Field& f = base.field();
  return EtRepresentation(base, v, w, Matrix(f, w, v),
                          std::vector<Matrix>(base.algebra_dim(), Matrix(f, v, v)),
                          std::vector<Matrix>(base.algebra_dim(), Matrix(f, w, w)),
                          std::vector<Matrix>(base.module_dim(), Matrix(f, v, w)));
}

}  // namespace malcev
