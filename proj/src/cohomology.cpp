#include "malcev/cohomology.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

namespace {

enum Condition { TensorCocycle = 0, BracketCocycle = 1, ActionCocycle = 2 };

const char* const kConditionNames[] = {"tensor_cocycle", "bracket_cocycle", "action_cocycle"};

void require_matching(const EtRepresentation& er, const TwoCochain& z) {
  if (!(z.shape() == er.shape()))
    throw Error(ErrorCode::ShapeError, "cochain shape does not match the coefficients");
  if (z.field() != er.field())
    throw Error(ErrorCode::FieldMismatch, "cochain over a different field");
}

void verify(const EtRepresentation& er, const CohomologyOptions& options) {
  if (options.verify_coefficients && !check_et_representation(er).passed())
    throw Error(ErrorCode::InvalidEtRepresentation, "the coefficients fail their axioms");
}

/// Evaluates every cocycle condition on every basis tuple and hands
/// (condition, tuple, value) to the sink, in canonical order.
template <class Sink>
void evaluate_conditions(const EtRepresentation& er, const TwoCochain& z, bool strict,
                         Sink&& sink) {
  const EmbeddingTensor& et = er.base();
  const AlgebraData& g = et.algebra();
  const Representation& rep = et.rep();
  const Field& f = er.field();
  const std::size_t n = g.dim(), m = et.module_dim();
  const Matrix& T = et.T();
  const Matrix& Tp = er.Tprime();
  auto e = [&](std::size_t i) { return unit_vector(f, n, i); };
  auto br = [&](const Vector& a, const Vector& b) { return bracket(g, a, b); };
  auto om = [&](const Vector& a, const Vector& b) { return z.omega(a, b); };

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector Ta = T.column(a), Tb = T.column(b), fb = unit_vector(f, m, b);
      const Vector tha = z.theta().column(a), thb = z.theta().column(b);
      Vector r = er.rho2_at(Ta).apply(thb);
      r -= er.rho2_at(Tb).apply(tha);
      r += om(Ta, Tb);
      r -= Tp.apply(z.nu(Ta, fb));
      r -= z.theta().apply(rep.act(Ta, fb));
      r += Tp.apply(er.rho3()[b].apply(tha));
      sink(TensorCocycle, std::vector<std::size_t>{a, b}, std::move(r));
    }

  const auto& rho2 = er.rho2();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t zz = 0; zz < n; ++zz)
        for (std::size_t t = 0; t < n; ++t) {
          const Vector xz = g.product(x, zz), yt = g.product(y, t);
          Vector r = er.rho2_at(xz).apply(z.omega(y, t));
          r -= er.rho2_at(yt).apply(z.omega(x, zz));
          r += om(xz, yt);
          const std::size_t cyc[4][4] = {{x, y, zz, t}, {y, zz, t, x}, {zz, t, x, y}, {t, x, y, zz}};
          for (int s = 0; s < 4; ++s) {
            const std::size_t pa = cyc[s][0], pb = cyc[s][1], pc = cyc[s][2], pd = cyc[s][3];
            const Vector ab = g.product(pa, pb);
            r += rho2[pd].apply(om(ab, e(pc)));
            r -= rho2[pd].apply(rho2[pc].apply(z.omega(pa, pb)));
            if (strict && s == 2)
              r -= om(br(g.product(zz, t), e(y)), e(x));
            else
              r -= om(br(ab, e(pc)), e(pd));
          }
          sink(BracketCocycle, std::vector<std::size_t>{x, y, zz, t}, std::move(r));
        }

  const auto& rho1 = er.rho1();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t zz = 0; zz < n; ++zz) {
        const Vector xy = g.product(x, y), zx = g.product(zz, x), yz = g.product(y, zz);
        const Vector xyz = br(xy, e(zz));
        const Matrix rho_zx = rep.action(zx);
        const Matrix rho1_yz = er.rho1_at(yz);
        for (std::size_t k = 0; k < m; ++k) {
          const Vector fk = unit_vector(f, m, k);
          const Matrix& r3 = er.rho3()[k];
          const Vector xm = rep.rho()[x].apply(fk), ym = rep.rho()[y].apply(fk),
                       zm = rep.rho()[zz].apply(fk);
          Vector r = r3.apply(rho2[zz].apply(z.omega(x, y)));
          r -= r3.apply(om(xy, e(zz)));
          r += z.nu(xyz, fk);
          r -= rho1[x].apply(rho1[y].apply(z.nu(e(zz), fk)));
          r -= rho1[x].apply(z.nu(e(y), zm));
          r -= z.nu(e(x), rep.rho()[y].apply(zm));
          r += rho1[zz].apply(rho1[x].apply(z.nu(e(y), fk)));
          r += rho1[zz].apply(z.nu(e(x), ym));
          r += z.nu(e(zz), rep.rho()[x].apply(ym));
          r += rho1[y].apply(r3.apply(z.omega(zz, x)));
          r -= rho1[y].apply(z.nu(zx, fk));
          r -= z.nu(e(y), rho_zx.apply(fk));
          r -= er.rho3_at(xm).apply(z.omega(y, zz));
          r += rho1_yz.apply(z.nu(e(x), fk));
          r += z.nu(yz, xm);
          sink(ActionCocycle, std::vector<std::size_t>{x, y, zz, k}, std::move(r));
        }
      }
}

Matrix stack_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
  return Matrix::from_columns(f, rows, cols);
}

Matrix drop_redundant_rows(const Matrix& a) {
  std::set<std::vector<std::string>> seen;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row = a.row(r);
    if (is_zero(row)) continue;
    std::vector<std::string> key;
    key.reserve(row.size());
    for (const auto& s : row) key.push_back(s.to_string());
    if (seen.insert(std::move(key)).second) rows.push_back(std::move(row));
  }
  return Matrix::from_rows(a.field(), a.cols(), rows);
}

Matrix block_identity(const Field& f, std::size_t rows, std::size_t cols, std::size_t offset_row,
                      std::size_t offset_col, std::size_t size) {
  Matrix out(f, rows, cols);
  for (std::size_t k = 0; k < size; ++k) out.at(offset_row + k, offset_col + k) = Scalar::one(f);
  return out;
}

Vector kernel_coordinates(const Matrix& inclusion, const Vector& u, const std::string& what) {
  auto c = solve(inclusion, u);
  if (!c) throw Error(ErrorCode::InvalidExtension, what + " leaves the kernel of the projection");
  return *c;
}

}  // namespace

EtRepresentation adjoint_coefficients(const EmbeddingTensor& et) {
  const Field& f = et.field();
  const std::size_t n = et.algebra_dim(), m = et.module_dim();
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(et.algebra().left_multiplication(unit_vector(f, n, i)));
  std::vector<Matrix> rho3;
  for (std::size_t k = 0; k < m; ++k) {
    Matrix r(f, m, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vector col = et.rep().rho()[i].column(k);
      for (std::size_t row = 0; row < m; ++row) r.at(row, i) = -col[row];
    }
    rho3.push_back(std::move(r));
  }
  return EtRepresentation(et, m, n, et.T(), et.rep().rho(), std::move(ad), std::move(rho3));
}

VerificationReport is_cocycle(const EtRepresentation& er, const TwoCochain& z,
                              const CohomologyOptions& options) {
  require_matching(er, z);
  verify(er, options);
  CheckResult checks[3] = {CheckResult(kConditionNames[0]), CheckResult(kConditionNames[1]),
                           CheckResult(kConditionNames[2])};
  evaluate_conditions(er, z, options.strict_printed,
                      [&](int cond, std::vector<std::size_t> tuple, Vector value) {
                        checks[cond].expect_zero(std::move(tuple), std::move(value));
                      });
  VerificationReport report("2-cocycle");
  for (auto& c : checks) report.add(std::move(c));
  if (options.strict_printed)
    report.note("bracket_cocycle evaluated with the term omega([[z,t],y],x)");
  return report;
}

std::vector<std::string> strict_variant_notes(const CochainShape& s) {
  std::vector<std::string> notes;
  if (s.v == s.w)
    notes.push_back("omega part: rho1 acting on W through the identification V = W");
  else
    notes.push_back("omega part: the rho1 variant does not typecheck (dim V != dim W); rho2 used");
  if (s.v == s.w && s.m == s.n)
    notes.push_back("nu part: rho2(m) with M read as g and W as V");
  else
    notes.push_back("nu part: the rho2(m) variant does not typecheck; rho3(m) used");
  return notes;
}

TwoCochain coboundary(const EtRepresentation& er, const OneCochain& b,
                      const CohomologyOptions& options) {
  const CochainShape s = er.shape();
  const Field& f = er.field();
  if (b.b0.rows() != s.v || b.b0.cols() != s.m || b.b1.rows() != s.w || b.b1.cols() != s.n)
    throw Error(ErrorCode::ShapeError, "one-cochain shape does not match the coefficients");
  if (b.b0.field() != f || b.b1.field() != f)
    throw Error(ErrorCode::FieldMismatch, "one-cochain over a different field");
  const EmbeddingTensor& et = er.base();
  const bool strict_omega = options.strict_printed && s.v == s.w;
  const bool strict_nu = strict_omega && s.m == s.n;

  TwoCochain z = TwoCochain::zero(f, s);
  z.theta() = er.Tprime() * b.b0 - b.b1 * et.T();
  const auto& act_w = strict_omega ? er.rho1() : er.rho2();
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < s.n; ++j) {
      Vector val = act_w[i].apply(b.b1.column(j));
      val -= act_w[j].apply(b.b1.column(i));
      val -= b.b1.apply(et.algebra().product(i, j));
      z.set_omega(i, j, val);
    }
  for (std::size_t i = 0; i < s.n; ++i) {
    Matrix nu = er.rho1()[i] * b.b0 - b.b0 * et.rep().rho()[i];
    const Vector b1x = b.b1.column(i);
    for (std::size_t k = 0; k < s.m; ++k) {
      const Vector term = strict_nu ? er.rho2()[k].apply(b1x) : er.rho3()[k].apply(b1x);
      for (std::size_t r = 0; r < s.v; ++r) nu.at(r, k) -= term[r];
    }
    z.nu()[i] = std::move(nu);
  }
  return z;
}

Matrix cocycle_constraints(const EtRepresentation& er, const CohomologyOptions& options) {
  verify(er, options);
  const CochainShape s = er.shape();
  const Field& f = er.field();
  const std::size_t N = s.two_cochain_size();
  std::vector<Vector> columns;
  columns.reserve(N);
  std::size_t rows = 0;
  for (std::size_t c = 0; c < N; ++c) {
    const TwoCochain unit = TwoCochain::from_coordinates(f, s, unit_vector(f, N, c));
    Vector col;
    evaluate_conditions(er, unit, options.strict_printed,
                        [&](int, const std::vector<std::size_t>&, const Vector& value) {
                          col.insert(col.end(), value.begin(), value.end());
                        });
    rows = col.size();
    columns.push_back(std::move(col));
  }
  if (N == 0) return Matrix(f, 0, 0);
  return drop_redundant_rows(stack_columns(f, rows, columns));
}

Matrix coboundary_matrix(const EtRepresentation& er, const CohomologyOptions& options) {
  const CochainShape s = er.shape();
  const Field& f = er.field();
  const std::size_t K = s.one_cochain_size();
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < K; ++c)
    columns.push_back(
        coboundary(er, OneCochain::from_coordinates(f, s, unit_vector(f, K, c)), options)
            .coordinates());
  return stack_columns(f, s.two_cochain_size(), columns);
}

std::vector<TwoCochain> cocycle_space(const EtRepresentation& er, const CohomologyOptions& options) {
  const CochainShape s = er.shape();
  const Field& f = er.field();
  std::vector<TwoCochain> basis;
  if (s.two_cochain_size() == 0) return basis;
  for (const auto& v : kernel_basis(cocycle_constraints(er, options)))
    basis.push_back(TwoCochain::from_coordinates(f, s, v));
  return basis;
}

H2Result h2(const EtRepresentation& er, const CohomologyOptions& options) {
  const CochainShape s = er.shape();
  const Field& f = er.field();
  H2Result out;
  out.cochain_dim = s.two_cochain_size();
  if (options.strict_printed) out.notes = strict_variant_notes(s);
  if (out.cochain_dim == 0) return out;

  const Matrix A = cocycle_constraints(er, options);
  const std::vector<Vector> Z = kernel_basis(A);
  const Matrix D = coboundary_matrix(er, options);
  out.cocycle_dim = Z.size();
  for (const auto& v : Z) out.cocycle_basis.push_back(TwoCochain::from_coordinates(f, s, v));
  out.coboundary_rank = rank(D);
  out.coboundaries_are_cocycles = A.rows() == 0 || D.cols() == 0 || (A * D).is_zero();

  std::vector<Vector> cols;
  for (std::size_t c = 0; c < D.cols(); ++c) cols.push_back(D.column(c));
  cols.insert(cols.end(), Z.begin(), Z.end());
  const RrefResult rr = rref(Matrix::from_columns(f, out.cochain_dim, cols));
  out.dimension = rr.rank - out.coboundary_rank;
  for (std::size_t p : rr.pivot_cols)
    if (p >= D.cols()) out.representatives.push_back(out.cocycle_basis[p - D.cols()]);

  if (!out.coboundaries_are_cocycles) {
    out.notes.push_back("some coboundaries fail the cocycle conditions");
    if (!options.strict_printed)
      throw Error(ErrorCode::InternalInconsistency,
                  "coboundaries fail the cocycle conditions in the default mode");
  }
  return out;
}

Splitting canonical_splitting(const CochainShape& s, const Field& f) {
  return {block_identity(f, s.m + s.v, s.m, 0, 0, s.m), block_identity(f, s.n + s.w, s.n, 0, 0, s.n)};
}

Extension extension_from_cocycle(const EtRepresentation& er, const TwoCochain& z,
                                 const CohomologyOptions& options) {
  if (!is_cocycle(er, z, options).passed())
    throw Error(ErrorCode::NotACocycle, "the cochain fails the cocycle conditions");
  const CochainShape s = er.shape();
  const Field& f = er.field();
  return Extension{twisted_semidirect(er, z),
                   block_identity(f, s.m + s.v, s.v, s.m, 0, s.v),
                   block_identity(f, s.n + s.w, s.w, s.n, 0, s.w),
                   block_identity(f, s.m, s.m + s.v, 0, 0, s.m),
                   block_identity(f, s.n, s.n + s.w, 0, 0, s.n)};
}

VerificationReport validate_extension(const EmbeddingTensor& base, const Extension& ext) {
  const Field& f = base.field();
  const std::size_t n = base.algebra_dim(), m = base.module_dim();
  const std::size_t nh = ext.hat.algebra_dim(), mh = ext.hat.module_dim();
  if (ext.i0.rows() != mh || ext.i1.rows() != nh || ext.p0.rows() != m || ext.p0.cols() != mh ||
      ext.p1.rows() != n || ext.p1.cols() != nh)
    throw Error(ErrorCode::ShapeError, "extension maps do not match the dimensions");
  const std::size_t v = ext.i0.cols(), w = ext.i1.cols();

  VerificationReport report("extension");
  {
    VerificationReport sub = check_malcev(ext.hat.algebra());
    sub.append(check_representation(ext.hat.rep(), Preconditions::Assume));
    sub.append(check_embedding_tensor(ext.hat, Preconditions::Assume));
    CheckResult c("hat_axioms");
    for (const auto& inner : sub.checks()) {
      c.evaluated += inner.evaluated;
      if (!inner.passed) {
        c.passed = false;
        c.notes.push_back(inner.name + " fails");
        for (const auto& viol : inner.violations) c.violations.push_back(viol);
      }
    }
    report.add(std::move(c));
  }

  CheckResult exact("exactness");
  auto rank_check = [&](std::size_t id, const Matrix& a, std::size_t expected) {
    exact.expect_equal({id}, {Scalar::from_int(f, static_cast<long>(rank(a)))},
                       {Scalar::from_int(f, static_cast<long>(expected))});
  };
  exact.expect_zero({0}, flatten(ext.p0 * ext.i0));
  exact.expect_zero({1}, flatten(ext.p1 * ext.i1));
  rank_check(2, ext.i0, v);
  rank_check(3, ext.i1, w);
  rank_check(4, ext.p0, m);
  rank_check(5, ext.p1, n);
  exact.expect_equal({6}, {Scalar::from_int(f, static_cast<long>(v + m))},
                     {Scalar::from_int(f, static_cast<long>(mh))});
  exact.expect_equal({7}, {Scalar::from_int(f, static_cast<long>(w + n))},
                     {Scalar::from_int(f, static_cast<long>(nh))});
  report.add(std::move(exact));

  CheckResult morph("projection_morphism");
  for (std::size_t a = 0; a < nh; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      morph.expect_equal({0, a, b}, ext.p1.apply(ext.hat.algebra().product(a, b)),
                         bracket(base.algebra(), ext.p1.column(a), ext.p1.column(b)));
  for (std::size_t a = 0; a < nh; ++a)
    morph.expect_equal({1, a}, flatten(ext.p0 * ext.hat.rep().rho()[a]),
                       flatten(base.rep().action(ext.p1.column(a)) * ext.p0));
  morph.expect_equal({2}, flatten(base.T() * ext.p0), flatten(ext.p1 * ext.hat.T()));
  report.add(std::move(morph));

  CheckResult ab("abelian_kernel");
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b)
      ab.expect_zero({0, a, b}, bracket(ext.hat.algebra(), ext.i1.column(a), ext.i1.column(b)));
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < v; ++b)
      ab.expect_zero({1, a, b}, ext.hat.rep().act(ext.i1.column(a), ext.i0.column(b)));
  report.add(std::move(ab));
  return report;
}

namespace {

void check_splitting(const EmbeddingTensor& base, const Extension& ext, const Splitting& s) {
  const Field& f = base.field();
  const std::size_t n = base.algebra_dim(), m = base.module_dim();
  if (s.sigma0.rows() != ext.hat.module_dim() || s.sigma0.cols() != m ||
      s.sigma1.rows() != ext.hat.algebra_dim() || s.sigma1.cols() != n)
    throw Error(ErrorCode::ShapeError, "splitting maps do not match the dimensions");
  if (!(ext.p0 * s.sigma0 == Matrix::identity(f, m)) ||
      !(ext.p1 * s.sigma1 == Matrix::identity(f, n)))
    throw Error(ErrorCode::InvalidSplitting, "p o sigma is not the identity");
}

}  // namespace

TwoCochain cocycle_from_splitting(const EmbeddingTensor& base, const Extension& ext,
                                  const Splitting& s) {
  check_splitting(base, ext, s);
  const Field& f = base.field();
  const CochainShape shape{base.algebra_dim(), base.module_dim(), ext.i0.cols(), ext.i1.cols()};
  TwoCochain z = TwoCochain::zero(f, shape);
  const Matrix theta_hat = ext.hat.T() * s.sigma0 - s.sigma1 * base.T();
  for (std::size_t k = 0; k < shape.m; ++k) {
    const Vector c = kernel_coordinates(ext.i1, theta_hat.column(k), "theta");
    for (std::size_t r = 0; r < shape.w; ++r) z.theta().at(r, k) = c[r];
  }
  for (std::size_t i = 0; i < shape.n; ++i)
    for (std::size_t j = i + 1; j < shape.n; ++j) {
      Vector u = bracket(ext.hat.algebra(), s.sigma1.column(i), s.sigma1.column(j));
      u -= s.sigma1.apply(base.algebra().product(i, j));
      z.set_omega(i, j, kernel_coordinates(ext.i1, u, "omega"));
    }
  for (std::size_t i = 0; i < shape.n; ++i) {
    const Matrix nu_hat = ext.hat.rep().action(s.sigma1.column(i)) * s.sigma0 -
                          s.sigma0 * base.rep().rho()[i];
    for (std::size_t k = 0; k < shape.m; ++k) {
      const Vector c = kernel_coordinates(ext.i0, nu_hat.column(k), "nu");
      for (std::size_t r = 0; r < shape.v; ++r) z.nu()[i].at(r, k) = c[r];
    }
  }
  return z;
}

EtRepresentation induced_coefficients(const EmbeddingTensor& base, const Extension& ext,
                                      const Splitting& s) {
  check_splitting(base, ext, s);
  const Field& f = base.field();
  const std::size_t n = base.algebra_dim(), m = base.module_dim();
  const std::size_t v = ext.i0.cols(), w = ext.i1.cols();
  auto pull = [&](const Matrix& inclusion, const Matrix& image, std::size_t dim,
                  const std::string& what) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < image.cols(); ++c)
      cols.push_back(kernel_coordinates(inclusion, image.column(c), what));
    return Matrix::from_columns(f, dim, cols);
  };
  const Matrix Tp = pull(ext.i1, ext.hat.T() * ext.i0, w, "T'");
  std::vector<Matrix> rho1, rho2, rho3;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector sx = s.sigma1.column(i);
    rho1.push_back(pull(ext.i0, ext.hat.rep().action(sx) * ext.i0, v, "rho1"));
    rho2.push_back(pull(ext.i1, ext.hat.algebra().left_multiplication(sx) * ext.i1, w, "rho2"));
  }
  for (std::size_t k = 0; k < m; ++k) {
    Matrix image(f, ext.hat.module_dim(), w);
    const Vector sm = s.sigma0.column(k);
    for (std::size_t l = 0; l < w; ++l)
      image.set_column(l, -ext.hat.rep().act(ext.i1.column(l), sm));
    rho3.push_back(pull(ext.i0, image, v, "rho3"));
  }
  return EtRepresentation(base, v, w, Tp, std::move(rho1), std::move(rho2), std::move(rho3));
}

std::optional<OneCochain> extensions_equivalent(const EtRepresentation& er, const TwoCochain& z1,
                                                const TwoCochain& z2,
                                                const CohomologyOptions& options) {
  if (!is_cocycle(er, z1, options).passed() || !is_cocycle(er, z2, options).passed())
    throw Error(ErrorCode::NotACocycle, "both cochains must be cocycles");
  const CochainShape s = er.shape();
  const Field& f = er.field();
  if (s.one_cochain_size() == 0) {
    if ((z1 - z2).is_zero()) return OneCochain::zero(f, s);
    return std::nullopt;
  }
  const Matrix D = coboundary_matrix(er, options);
  auto x = solve(D, (z1 - z2).coordinates());
  if (!x) return std::nullopt;
  return OneCochain::from_coordinates(f, s, *x);
}

}  // namespace malcev
