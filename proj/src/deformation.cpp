#include "malcev/deformation.hpp"

#include <string>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

CochainShape adjoint_shape(const EmbeddingTensor& et) {
  return {et.algebra_dim(), et.module_dim(), et.module_dim(), et.algebra_dim()};
}

namespace {

void require_adjoint_shape(const EmbeddingTensor& et, const DeformationTriple& d) {
  if (!(d.shape() == adjoint_shape(et)))
    throw Error(ErrorCode::ShapeError, "deformation triple does not have adjoint shape");
  if (d.field() != et.field())
    throw Error(ErrorCode::FieldMismatch, "deformation triple over a different field");
}

/// The structure T_0 + l T_1 + ..., graded by the power of l.
class Graded {
 public:
  Graded(const EmbeddingTensor& et, const std::vector<DeformationTriple>& terms)
      : et_(et), terms_(terms) {}

  std::size_t top() const { return terms_.size(); }

  Vector bracket(std::size_t i, const Vector& x, const Vector& y) const {
    return i == 0 ? malcev::bracket(et_.algebra(), x, y) : terms_[i - 1].omega(x, y);
  }
  Matrix action(std::size_t i, const Vector& x) const {
    return i == 0 ? et_.rep().action(x) : terms_[i - 1].nu_at(x);
  }
  const Matrix& tensor(std::size_t i) const { return i == 0 ? et_.T() : terms_[i - 1].theta(); }

 private:
  const EmbeddingTensor& et_;
  const std::vector<DeformationTriple>& terms_;
};

/// Per-degree values of the three identities, degrees 0..3 * top.
struct Series {
  std::vector<CheckResult> tensor, sagle, representation;
};

Series evaluate_series(const EmbeddingTensor& et, const Graded& s, const std::string& tensor_name,
                       const std::string& sagle_name, const std::string& rep_name,
                       const std::vector<std::string>& suffix) {
  const Field& f = et.field();
  const std::size_t n = et.algebra_dim(), m = et.module_dim(), L = s.top(), D = 3 * L + 1;
  Series out;
  for (std::size_t l = 0; l < D; ++l) {
    out.tensor.emplace_back(tensor_name + suffix[l]);
    out.sagle.emplace_back(sagle_name + suffix[l]);
    out.representation.emplace_back(rep_name + suffix[l]);
  }
  auto e = [&](std::size_t i) { return unit_vector(f, n, i); };

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector fb = unit_vector(f, m, b);
      std::vector<Vector> Ta, Tb;
      for (std::size_t j = 0; j <= L; ++j) {
        Ta.push_back(s.tensor(j).column(a));
        Tb.push_back(s.tensor(j).column(b));
      }
      std::vector<Vector> acc(D, zero_vector(f, n));
      for (std::size_t k = 0; k <= L; ++k)
        for (std::size_t j = 0; j <= L; ++j) {
          const Vector act = s.action(j, Ta[k]).apply(fb);
          for (std::size_t i = 0; i <= L; ++i) {
            acc[i + j + k] += s.bracket(i, Ta[j], Tb[k]);
            acc[i + j + k] -= s.tensor(i).apply(act);
          }
        }
      for (std::size_t l = 0; l < D; ++l) out.tensor[l].expect_zero({a, b}, std::move(acc[l]));
    }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t) {
          std::vector<Vector> acc(D, zero_vector(f, n));
          std::vector<Vector> xz, yt;
          for (std::size_t j = 0; j <= L; ++j) {
            xz.push_back(s.bracket(j, e(x), e(z)));
            yt.push_back(s.bracket(j, e(y), e(t)));
          }
          for (std::size_t i = 0; i <= L; ++i)
            for (std::size_t j = 0; j <= L; ++j)
              for (std::size_t k = 0; k <= L; ++k) acc[i + j + k] += s.bracket(i, xz[j], yt[k]);
          const std::size_t cyc[4][4] = {{x, y, z, t}, {y, z, t, x}, {z, t, x, y}, {t, x, y, z}};
          for (const auto& c : cyc)
            for (std::size_t k = 0; k <= L; ++k) {
              const Vector ab = s.bracket(k, e(c[0]), e(c[1]));
              for (std::size_t j = 0; j <= L; ++j) {
                const Vector abc = s.bracket(j, ab, e(c[2]));
                for (std::size_t i = 0; i <= L; ++i) acc[i + j + k] -= s.bracket(i, abc, e(c[3]));
              }
            }
          for (std::size_t l = 0; l < D; ++l)
            out.sagle[l].expect_zero({x, y, z, t}, std::move(acc[l]));
        }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::vector<Matrix> acc(D, Matrix(f, m, m));
        std::vector<Matrix> Rx, Ry, Rz;
        std::vector<Vector> Bxy, Bzx, Byz;
        for (std::size_t j = 0; j <= L; ++j) {
          Rx.push_back(s.action(j, e(x)));
          Ry.push_back(s.action(j, e(y)));
          Rz.push_back(s.action(j, e(z)));
          Bxy.push_back(s.bracket(j, e(x), e(y)));
          Bzx.push_back(s.bracket(j, e(z), e(x)));
          Byz.push_back(s.bracket(j, e(y), e(z)));
        }
        for (std::size_t i = 0; i <= L; ++i)
          for (std::size_t j = 0; j <= L; ++j)
            for (std::size_t k = 0; k <= L; ++k) {
              Matrix& r = acc[i + j + k];
              r += s.action(i, s.bracket(j, Bxy[k], e(z)));
              r -= Rx[i] * (Ry[j] * Rz[k]);
              r += Rz[i] * (Rx[j] * Ry[k]);
              r -= Ry[i] * s.action(j, Bzx[k]);
              r += s.action(i, Byz[j]) * Rx[k];
            }
        for (std::size_t l = 0; l < D; ++l)
          out.representation[l].expect_zero({x, y, z}, flatten(acc[l]));
      }
  return out;
}

}  // namespace

std::string DeformationReport::to_text() const {
  std::string out = order1.to_text() + order2.to_text() + order3.to_text();
  return out + "overall: " + (passed() ? "pass" : "FAIL") + "\n";
}

DeformationReport check_first_order(const EmbeddingTensor& et, const DeformationTriple& d,
                                    Preconditions pre) {
  require_adjoint_shape(et, d);
  if (pre == Preconditions::Verify && !check_embedding_tensor(et).passed())
    throw Error(ErrorCode::NotAnEmbeddingTensor, "the base fails the embedding tensor identity");
  const std::vector<DeformationTriple> terms{d};
  const Series s = evaluate_series(et, Graded(et, terms), "tensor", "bracket", "action",
                                   {"_order0", "_order1", "_order2", "_order3"});
  DeformationReport r;
  VerificationReport* orders[3] = {&r.order1, &r.order2, &r.order3};
  for (std::size_t l = 1; l <= 3; ++l) {
    orders[l - 1]->add(s.tensor[l]);
    orders[l - 1]->add(s.sagle[l]);
    orders[l - 1]->add(s.representation[l]);
  }
  return r;
}

DeformedStructure deform(const EmbeddingTensor& et, const FormalDeformation& f) {
  DeformedStructure d;
  const std::size_t n = et.algebra_dim();
  d.tensor.push_back(et.T());
  d.bracket.push_back(et.algebra());
  d.action.push_back(et.rep().rho());
  for (const auto& t : f.terms) {
    require_adjoint_shape(et, t);
    d.tensor.push_back(t.theta());
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) entries.push_back({i, j, t.omega(i, j)});
    d.bracket.push_back(AlgebraData::skew(et.field(), n, entries));
    d.action.push_back(t.nu());
  }
  return d;
}

bool FormalReport::passed() const {
  for (const auto& r : degrees)
    if (!r.passed()) return false;
  return true;
}

std::string FormalReport::to_text() const {
  std::string out;
  for (const auto& r : degrees) out += r.to_text();
  return out + "overall: " + (passed() ? "pass" : "FAIL") + "\n";
}

FormalReport check_formal(const EmbeddingTensor& et, const FormalDeformation& f) {
  for (const auto& t : f.terms) require_adjoint_shape(et, t);
  const std::size_t D = 3 * f.order() + 1;
  const std::vector<std::string> suffix(D, "_series");
  const Series s = evaluate_series(et, Graded(et, f.terms), "tensor", "sagle", "representation",
                                   suffix);
  FormalReport r;
  for (std::size_t l = 0; l < D; ++l) {
    VerificationReport deg("degree " + std::to_string(l));
    deg.add(s.sagle[l]);
    deg.add(s.representation[l]);
    deg.add(s.tensor[l]);
    r.degrees.push_back(std::move(deg));
  }
  return r;
}

namespace {

Vector bracket_n(const EmbeddingTensor& et, const Matrix& N1, const Vector& x, const Vector& y) {
  const AlgebraData& g = et.algebra();
  Vector r = bracket(g, N1.apply(x), y);
  r += bracket(g, x, N1.apply(y));
  r -= N1.apply(bracket(g, x, y));
  return r;
}

Vector action_n(const EmbeddingTensor& et, const NijenhuisPair& N, const Vector& x,
                const Vector& m) {
  const Representation& rep = et.rep();
  Vector r = rep.act(N.N1.apply(x), m);
  r += rep.act(x, N.N0.apply(m));
  r -= N.N0.apply(rep.act(x, m));
  return r;
}

void require_pair_shape(const EmbeddingTensor& et, const NijenhuisPair& N) {
  const std::size_t n = et.algebra_dim(), m = et.module_dim();
  if (N.N0.rows() != m || N.N0.cols() != m || N.N1.rows() != n || N.N1.cols() != n)
    throw Error(ErrorCode::ShapeError, "N0 must be m x m and N1 n x n");
  if (N.N0.field() != et.field() || N.N1.field() != et.field())
    throw Error(ErrorCode::FieldMismatch, "Nijenhuis pair over a different field");
}

}  // namespace

VerificationReport is_nijenhuis(const EmbeddingTensor& et, const NijenhuisPair& N) {
  require_pair_shape(et, N);
  const Field& f = et.field();
  const std::size_t n = et.algebra_dim(), m = et.module_dim();
  const Matrix& T = et.T();
  VerificationReport r("nijenhuis");

  CheckResult kernel("kernel_condition");
  const std::vector<Vector> image = image_basis(T * N.N0 - N.N1 * T);
  for (std::size_t k = 0; k < image.size(); ++k) kernel.expect_zero({k}, N.N1.apply(image[k]));
  r.add(std::move(kernel));

  CheckResult br("bracket_condition");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = unit_vector(f, n, i), y = unit_vector(f, n, j);
      br.expect_equal({i, j}, N.N1.apply(bracket_n(et, N.N1, x, y)),
                      bracket(et.algebra(), N.N1.apply(x), N.N1.apply(y)));
    }
  r.add(std::move(br));

  CheckResult act("action_condition");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const Vector x = unit_vector(f, n, i), v = unit_vector(f, m, k);
      act.expect_equal({i, k}, N.N0.apply(action_n(et, N, x, v)),
                       et.rep().act(N.N1.apply(x), N.N0.apply(v)));
    }
  r.add(std::move(act));
  return r;
}

DeformationTriple adjoint_coboundary(const EmbeddingTensor& et, const Matrix& phi,
                                     const Matrix& psi) {
  require_pair_shape(et, {phi, psi});
  return coboundary(adjoint_coefficients(et), {phi, psi});
}

DeformationTriple nijenhuis_to_deformation(const EmbeddingTensor& et, const NijenhuisPair& N) {
  if (!is_nijenhuis(et, N).passed())
    throw Error(ErrorCode::NotNijenhuis, "the pair fails the Nijenhuis conditions");
  return adjoint_coboundary(et, N.N0, N.N1);
}

VerificationReport check_trivial_morphism(const EmbeddingTensor& et, const DeformationTriple& d,
                                          const NijenhuisPair& N) {
  require_adjoint_shape(et, d);
  require_pair_shape(et, N);
  const Field& f = et.field();
  const std::size_t n = et.algebra_dim(), m = et.module_dim();
  const AlgebraData& g = et.algebra();
  const Representation& rep = et.rep();
  const Matrix& T = et.T();
  const Matrix &N0 = N.N0, &N1 = N.N1;
  VerificationReport r("trivial morphism");

  CheckResult t1("tensor_order1"), t2("tensor_order2"), tc("tensor_constraint");
  for (std::size_t k = 0; k < m; ++k) {
    const Vector v = unit_vector(f, m, k);
    t1.expect_equal({k}, T.apply(N0.apply(v)), N1.apply(T.apply(v)) + d.theta().apply(v));
    t2.expect_zero({k}, N1.apply(d.theta().apply(v)));
    tc.expect_zero({k}, N1.apply(T.apply(N0.apply(v)) - N1.apply(T.apply(v))));
  }

  CheckResult b1("bracket_order1"), b2("bracket_order2"), bc("bracket_constraint");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = unit_vector(f, n, i), y = unit_vector(f, n, j);
      const Vector Nx = N1.apply(x), Ny = N1.apply(y);
      b1.expect_equal({i, j}, N1.apply(bracket(g, x, y)) + d.omega(i, j),
                      bracket(g, Nx, y) + bracket(g, x, Ny));
      b2.expect_equal({i, j}, N1.apply(d.omega(i, j)), bracket(g, Nx, Ny));
      bc.expect_equal({i, j}, bracket(g, Nx, Ny), N1.apply(bracket_n(et, N1, x, y)));
    }

  CheckResult a1("action_order1"), a2("action_order2"), ac("action_constraint");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const Vector x = unit_vector(f, n, i), v = unit_vector(f, m, k);
      const Vector Nx = N1.apply(x), Nv = N0.apply(v);
      a1.expect_equal({i, k}, N0.apply(rep.act(x, v)) + d.nu(x, v),
                      rep.act(Nx, v) + rep.act(x, Nv));
      a2.expect_equal({i, k}, N0.apply(d.nu(x, v)), rep.act(Nx, Nv));
      ac.expect_equal({i, k}, rep.act(Nx, Nv), N0.apply(action_n(et, N, x, v)));
    }

  for (auto* c : {&t1, &t2, &b1, &b2, &a1, &a2, &tc, &bc, &ac}) r.add(std::move(*c));
  return r;
}

bool first_order_cohomologous(const EmbeddingTensor& et, const DeformationTriple& d1,
                              const DeformationTriple& d2, const Matrix& phi1, const Matrix& psi1) {
  require_adjoint_shape(et, d1);
  require_adjoint_shape(et, d2);
  return d1 - d2 == adjoint_coboundary(et, phi1, psi1);
}

std::string RigidityReport::to_text() const {
  std::string out = "H2 dimension: " + std::to_string(cohomology.dimension) + "\n";
  out += rigid ? "rigid (sufficient condition met)\n"
               : "H2 nonzero: rigidity not concluded\n";
  return out;
}

RigidityReport rigidity_report(const EmbeddingTensor& et) {
  CohomologyOptions options;
  options.verify_coefficients = false;
  RigidityReport r;
  r.cohomology = h2(adjoint_coefficients(et), options);
  r.rigid = r.cohomology.dimension == 0;
  return r;
}

}  // namespace malcev
