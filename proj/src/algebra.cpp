#include "malcev/algebra.hpp"

#include <map>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

namespace {

void check_entry(const Field& f, std::size_t dim, const BracketEntry& e) {
  if (e.i >= dim || e.j >= dim)
    throw Error(ErrorCode::ShapeError, "bracket entry (" + std::to_string(e.i) + "," +
                                           std::to_string(e.j) + ") out of range for dimension " +
                                           std::to_string(dim));
  if (e.coeffs.size() != dim)
    throw Error(ErrorCode::ShapeError, "bracket entry (" + std::to_string(e.i) + "," +
                                           std::to_string(e.j) + ") has " +
                                           std::to_string(e.coeffs.size()) + " coefficients");
  for (const auto& s : e.coeffs)
    if (s.field() != f)
      throw Error(ErrorCode::FieldMismatch, "bracket coefficient over " + s.field().to_string() +
                                                " in an algebra over " + f.to_string());
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_skew(const AlgebraData& a, const char* what) {
  if (!a.is_skew())
    throw Error(ErrorCode::NonSkewInput, std::string(what) + " needs a skew-symmetric bracket");
}

}  // namespace

AlgebraData::AlgebraData(const Field& f, std::size_t dim, bool skew)
    : field_(f), dim_(dim), skew_(skew), table_(dim * dim, zero_vector(f, dim)),
      nonzero_(dim * dim, false) {}

AlgebraData AlgebraData::skew(const Field& f, std::size_t dim,
                              const std::vector<BracketEntry>& entries) {
  AlgebraData a(f, dim, true);
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (const auto& e : entries) {
    check_entry(f, dim, e);
    if (e.i == e.j) {
      if (!is_zero(e.coeffs))
        throw Error(ErrorCode::NonSkewInput, "nonzero [e_i,e_i] at " + pair_name(e.i, e.j));
      continue;
    }
    const bool flip = e.i > e.j;
    const std::size_t i = flip ? e.j : e.i, j = flip ? e.i : e.j;
    if (!seen.emplace(std::make_pair(i, j), true).second)
      throw Error(ErrorCode::ParseError, "bracket pair " + pair_name(i, j) + " given twice");
    Vector c = flip ? -e.coeffs : e.coeffs;
    a.table_[j * dim + i] = -c;
    a.table_[i * dim + j] = std::move(c);
  }
  for (std::size_t k = 0; k < dim * dim; ++k) a.nonzero_[k] = !is_zero(a.table_[k]);
  return a;
}

AlgebraData AlgebraData::general(const Field& f, std::size_t dim,
                                 const std::vector<BracketEntry>& entries) {
  AlgebraData a(f, dim, false);
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (const auto& e : entries) {
    check_entry(f, dim, e);
    if (!seen.emplace(std::make_pair(e.i, e.j), true).second)
      throw Error(ErrorCode::ParseError, "bracket pair " + pair_name(e.i, e.j) + " given twice");
    a.table_[e.i * dim + e.j] = e.coeffs;
  }
  for (std::size_t k = 0; k < dim * dim; ++k) a.nonzero_[k] = !is_zero(a.table_[k]);
  return a;
}

AlgebraData AlgebraData::abelian(const Field& f, std::size_t dim) { return skew(f, dim, {}); }

std::vector<BracketEntry> AlgebraData::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = skew_ ? i + 1 : 0; j < dim_; ++j)
      if (nonzero_[i * dim_ + j]) out.push_back({i, j, table_[i * dim_ + j]});
  return out;
}

AlgebraData AlgebraData::as_general() const {
  AlgebraData a = *this;
  a.skew_ = false;
  return a;
}

AlgebraData AlgebraData::opposite() const {
  AlgebraData a(field_, dim_, skew_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      a.table_[i * dim_ + j] = table_[j * dim_ + i];
      a.nonzero_[i * dim_ + j] = nonzero_[j * dim_ + i];
    }
  return a;
}

Matrix AlgebraData::left_multiplication(const Vector& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(*this, x, unit_vector(field_, dim_, j)));
  return m;
}

bool operator==(const AlgebraData& a, const AlgebraData& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.skew_ == b.skew_ && a.table_ == b.table_;
}

Vector bracket(const AlgebraData& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim_;
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::ShapeError, "bracket arguments of length " + std::to_string(x.size()) +
                                           " and " + std::to_string(y.size()) +
                                           " in dimension " + std::to_string(n));
  Vector out = zero_vector(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || !a.nonzero_[i * n + j]) continue;
      axpy(out, x[i] * y[j], a.table_[i * n + j]);
    }
  }
  return out;
}

Vector jacobiator(const AlgebraData& a, const Vector& x, const Vector& y, const Vector& z) {
  require_skew(a, "the Jacobiator");
  Vector j = bracket(a, bracket(a, x, y), z);
  j += bracket(a, bracket(a, y, z), x);
  j += bracket(a, bracket(a, z, x), y);
  return j;
}

VerificationReport check_malcev(const AlgebraData& a) {
  require_skew(a, "the Malcev check");
  if (a.field().characteristic() == 2) {
    VerificationReport r = check_sagle(a);
    r.note("characteristic 2: the Malcev identity is not evaluated; the Sagle identity stands in");
    CheckResult c = r.check("sagle");
    c.name = "malcev";
    c.notes.push_back("evaluated as the Sagle identity");
    r.add(std::move(c));
    return r;
  }
  const Field& f = a.field();
  const std::size_t n = a.dim();
  CheckResult c{"malcev"};
  auto test = [&](const Vector& x, std::vector<std::size_t> prefix) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector y = unit_vector(f, n, j), z = unit_vector(f, n, k);
        Vector lhs = jacobiator(a, x, y, bracket(a, x, z));
        Vector rhs = bracket(a, jacobiator(a, x, y, z), x);
        auto tuple = prefix;
        tuple.push_back(j);
        tuple.push_back(k);
        c.expect_equal(std::move(tuple), std::move(lhs), std::move(rhs));
      }
  };
  for (std::size_t i = 0; i < n; ++i) test(unit_vector(f, n, i), {i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t i2 = i + 1; i2 < n; ++i2)
      test(unit_vector(f, n, i) + unit_vector(f, n, i2), {i, i2});
  c.notes.push_back("4-entry tuples (i,j,y,z) evaluate x = e_i + e_j");
  VerificationReport r("malcev identity");
  r.add(std::move(c));
  return r;
}

VerificationReport check_sagle(const AlgebraData& a) {
  require_skew(a, "the Sagle check");
  const std::size_t n = a.dim();
  CheckResult c{"sagle"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t) {
          auto nest = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
            const Vector e_r = unit_vector(a.field(), n, r), e_s = unit_vector(a.field(), n, s);
            return bracket(a, bracket(a, a.product(p, q), e_r), e_s);
          };
          Vector lhs = bracket(a, a.product(x, z), a.product(y, t));
          Vector rhs = nest(x, y, z, t);
          rhs += nest(y, z, t, x);
          rhs += nest(z, t, x, y);
          rhs += nest(t, x, y, z);
          c.expect_equal({x, y, z, t}, std::move(lhs), std::move(rhs));
        }
  VerificationReport r("sagle identity");
  r.add(std::move(c));
  return r;
}

VerificationReport check_jacobi(const AlgebraData& a) {
  require_skew(a, "the Jacobi check");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  CheckResult c{"jacobi"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        c.expect_zero({x, y, z}, jacobiator(a, unit_vector(f, n, x), unit_vector(f, n, y),
                                            unit_vector(f, n, z)));
  VerificationReport r("jacobi identity");
  r.add(std::move(c));
  return r;
}

namespace {

VerificationReport dialgebra_axioms(const AlgebraData& a, const std::string& prefix) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  auto e = [&](std::size_t i) { return unit_vector(f, n, i); };
  auto b = [&](const Vector& x, const Vector& y) { return bracket(a, x, y); };

  CheckResult anti{prefix + "_anticommutator"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        anti.expect_zero({x, y, z}, b(a.product(x, y) + a.product(y, x), e(z)));

  CheckResult five{prefix + "_five_term"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t) {
          Vector lhs = b(e(x), b(e(y), a.product(z, t)));
          Vector rhs = b(e(y), b(e(z), a.product(x, t)));
          rhs += b(e(z), b(a.product(x, y), e(t)));
          rhs += b(a.product(x, z), a.product(y, t));
          rhs += b(b(e(x), a.product(y, z)), e(t));
          five.expect_equal({x, y, z, t}, std::move(lhs), std::move(rhs));
        }
  VerificationReport r(prefix + " malcev dialgebra axioms");
  r.add(std::move(anti));
  r.add(std::move(five));
  return r;
}

}  // namespace

VerificationReport check_left_dialgebra(const AlgebraData& a) { return dialgebra_axioms(a, "left"); }

VerificationReport check_right_dialgebra(const AlgebraData& a) {
  return dialgebra_axioms(a.opposite(), "right");
}

VerificationReport check_homomorphism(const AlgebraData& source, const AlgebraData& target,
                                      const Matrix& phi) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim())
    throw Error(ErrorCode::ShapeError, "homomorphism matrix must be " +
                                           std::to_string(target.dim()) + "x" +
                                           std::to_string(source.dim()));
  if (phi.field() != source.field() || target.field() != source.field())
    throw Error(ErrorCode::FieldMismatch, "homomorphism between algebras over different fields");
  CheckResult c{"homomorphism"};
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j)
      c.expect_equal({i, j}, bracket(target, phi.column(i), phi.column(j)),
                     phi.apply(source.product(i, j)));
  VerificationReport r("homomorphism");
  r.add(std::move(c));
  return r;
}

bool is_malcev(const AlgebraData& a) { return check_malcev(a).passed(); }

}  // namespace malcev
