#include <gtest/gtest.h>

#include "malcev/cohomology.hpp"
#include "malcev/error.hpp"
#include "malcev/et_representation.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/oracle.hpp"
#include "support.hpp"

using namespace malcev;
using namespace malcev::testing;
namespace fx = malcev::fixtures;

namespace {

void expect_closure(const EmbeddingTensor& s, const std::string& label) {
  EXPECT_TRUE(check_malcev(s.algebra()).passed()) << label;
  EXPECT_TRUE(check_representation(s.rep(), Preconditions::Assume).passed()) << label;
  EXPECT_TRUE(check_embedding_tensor(s, Preconditions::Assume).passed()) << label;
}

/// T' rho3(m) T'v = 1 while rho2(Tm) T'v = 0.
EtRepresentation broken_image_condition(const Field& f) {
  const EmbeddingTensor base = fx::zero_tensor(trivial_rep(fx::abelian(f, 1), 1));
  return EtRepresentation(base, 1, 1, mat(f, {{1}}), {mat(f, {{0}})}, {mat(f, {{0}})}, {mat(f, {{1}})});
}

}  // namespace

TEST(EtRepresentation, SevenNamedChecks) {
  const VerificationReport r = check_et_representation(fx::fully_abelian(Q()));
  for (const char* name : {"rho1_representation", "rho2_representation", "equivariance", "image_compatibility",
                           "compatibility_1", "compatibility_2", "compatibility_3"})
    EXPECT_TRUE(r.has_check(name)) << name;
  EXPECT_TRUE(r.passed());
}

TEST(EtRepresentation, ZeroCoefficientsPass) {
  for (const auto& [name, et] : fx::tensors(Q())) {
    EXPECT_TRUE(check_et_representation(zero_coefficients(et, 0, 0)).passed()) << name;
    EXPECT_TRUE(check_et_representation(zero_coefficients(et, 2, 1)).passed()) << name;
  }
}

TEST(EtRepresentation, AdjointCoefficientsOnAbelianZeroTensorPass) {
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_TRUE(check_et_representation(adjoint_coefficients(fx::zero_tensor(adjoint_rep(fx::abelian(Q(), n)))))
                    .passed());
}

TEST(EtRepresentation, AdjointCoefficientsOnSl2IdentityPassEveryCheck) {
  const EtRepresentation er = adjoint_coefficients(fx::identity_on_adjoint(fx::sl2(Q())));
  const VerificationReport r = check_et_representation(er);
  for (const auto& c : r.checks()) EXPECT_TRUE(c.passed) << c.name;
  expect_closure(semidirect_et(er), "sl2");
}

TEST(EtRepresentation, ImageConditionOnlyConstrainsImageOfTprime) {
  const Field f = F(3);
  const EtRepresentation broken = broken_image_condition(f);
  EXPECT_FALSE(check_et_representation(broken).check("image_compatibility").passed);
  const EtRepresentation unconstrained(broken.base(), 1, 1, mat(f, {{0}}), broken.rho1(), broken.rho2(),
                                       broken.rho3());
  EXPECT_TRUE(check_et_representation(unconstrained).check("image_compatibility").passed);
}

TEST(EtRepresentation, FixturesPass) {
  for (const auto& c : fx::coefficient_systems(Q()))
    if (c.verified) {
      EXPECT_TRUE(check_et_representation(c.coefficients).passed()) << c.name;
    }
}

TEST(EtRepresentation, BaseMustBeEmbeddingTensor) {
  const EmbeddingTensor bad(fx::aff1_line(Q()), mat(Q(), {{1}, {0}}));
  try {
    (void)check_et_representation(zero_coefficients(bad, 1, 1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotAnEmbeddingTensor);
  }
}

TEST(SemidirectEt, ZeroCoefficientsPadBase) {
  for (const auto& [name, et] : fx::tensors(Q())) {
    const EmbeddingTensor s = semidirect_et(zero_coefficients(et, 1, 2));
    const std::size_t n = et.algebra_dim(), m = et.module_dim();
    ASSERT_EQ(s.algebra_dim(), n + 2);
    ASSERT_EQ(s.module_dim(), m + 1);
    for (std::size_t r = 0; r < n + 2; ++r)
      for (std::size_t c = 0; c < m + 1; ++c)
        EXPECT_EQ(s.T().at(r, c), r < n && c < m ? et.T().at(r, c) : Scalar::zero(Q())) << name;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(Vector(s.algebra().product(i, j).begin(), s.algebra().product(i, j).begin() + n),
                  et.algebra().product(i, j));
    expect_closure(s, name);
  }
}

TEST(SemidirectEt, AbelianTrivialDataIsBlockDiagonal) {
  const Field f = Q();
  const EmbeddingTensor base(trivial_rep(fx::abelian(f, 2), 2), mat(f, {{1, 2}, {3, 4}}));
  const EtRepresentation er(base, 1, 1, mat(f, {{0}}), {mat(f, {{0}}), mat(f, {{0}})},
                            {mat(f, {{0}}), mat(f, {{0}})}, {mat(f, {{0}}), mat(f, {{0}})});
  const EmbeddingTensor s = semidirect_et(er);
  EXPECT_EQ(s.T(), mat(f, {{1, 2, 0}, {3, 4, 0}, {0, 0, 0}}));
  EXPECT_TRUE(s.algebra().entries().empty());
  expect_closure(s, "abelian");
}

TEST(SemidirectEt, RefusesInvalidCoefficients) {
  try {
    (void)semidirect_et(broken_image_condition(F(3)));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::InvalidEtRepresentation);
  }
}

TEST(SemidirectEt, ClosureOnFixturesAndRandomInstances) {
  for (const auto& c : fx::coefficient_systems(F(3)))
    if (check_et_representation(c.coefficients).passed()) expect_closure(semidirect_et(c.coefficients), c.name);
  RandomSource rng(11);
  std::size_t found = 0;
  for (int attempt = 0; attempt < 200 && found < 25; ++attempt) {
    const auto base = rng.embedding_tensor(F(3), 2);
    if (!base) continue;
    const auto er = rng.et_representation(*base, 2);
    if (!er) continue;
    expect_closure(semidirect_et(*er), "random " + std::to_string(found));
    ++found;
  }
  EXPECT_EQ(found, 25u);
}

TEST(SemidirectEt, AlgebraPlusWIsMalcevWhenRho2IsARepresentation) {
  RandomSource rng(12);
  std::size_t tested = 0;
  for (int attempt = 0; attempt < 400 && tested < 30; ++attempt) {
    const auto base = rng.embedding_tensor(F(3), 2);
    if (!base) continue;
    const std::size_t w = 1 + rng.next() % 2;
    std::vector<Matrix> rho2;
    for (std::size_t i = 0; i < base->algebra_dim(); ++i) rho2.push_back(rng.matrix(F(3), w, w));
    if (!check_representation(Representation(base->algebra(), w, rho2), Preconditions::Assume).passed()) continue;
    const EtRepresentation er(*base, 0, w, Matrix(F(3), w, 0), std::vector<Matrix>(base->algebra_dim(), Matrix(F(3), 0, 0)),
                              rho2, std::vector<Matrix>(base->module_dim(), Matrix(F(3), 0, w)));
    const EmbeddingTensor s = twisted_semidirect(er, TwoCochain::zero(F(3), er.shape()));
    EXPECT_TRUE(s.algebra().is_skew());
    EXPECT_TRUE(check_malcev(s.algebra()).passed());
    ++tested;
  }
  EXPECT_EQ(tested, 30u);
}
