#include <gtest/gtest.h>

#include "malcev/cohomology.hpp"
#include "malcev/deformation.hpp"
#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/oracle.hpp"
#include "support.hpp"

using namespace malcev;
using namespace malcev::testing;
namespace fx = malcev::fixtures;

namespace {

/// The structure sum_k l^k (T_k, [,]_k, rho_k) at a concrete value of l.
EmbeddingTensor evaluate_at(const EmbeddingTensor& et, const FormalDeformation& f, long value) {
  const Field& fld = et.field();
  const std::size_t n = et.algebra_dim(), m = et.module_dim();
  Matrix T = et.T();
  std::vector<Matrix> rho = et.rep().rho();
  std::vector<BracketEntry> entries;
  std::vector<Vector> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) table.push_back(et.algebra().product(i, j));
  Scalar power = Scalar::one(fld);
  for (const auto& d : f.terms) {
    power *= s(fld, value);
    T += power * d.theta();
    for (std::size_t i = 0; i < n; ++i) rho[i] += power * d.nu()[i];
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++k) table[k] += power * d.omega(i, j);
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) entries.push_back({i, j, table[k]});
  return EmbeddingTensor(Representation(AlgebraData::skew(fld, n, entries), m, rho), T);
}

bool structure_valid(const EmbeddingTensor& et) {
  return check_malcev(et.algebra()).passed() &&
         check_representation(et.rep(), Preconditions::Assume).passed() &&
         check_embedding_tensor(et, Preconditions::Assume).passed();
}

/// Every identity has degree at most 3 per term of the family, so vanishing at
/// 3L + 1 distinct nonzero values (with the base valid) forces every coefficient to vanish.
bool valid_at_numeric_values(const EmbeddingTensor& et, const FormalDeformation& f) {
  for (long value = 1; value <= static_cast<long>(3 * f.order() + 1); ++value)
    if (!structure_valid(evaluate_at(et, f, value))) return false;
  return true;
}

DeformationTriple random_sparse(RandomSource& rng, const Field& f, const CochainShape& sh) {
  Vector c = rng.two_cochain(f, sh).coordinates();
  for (auto& x : c)
    if (rng.next() % 3) x = Scalar::zero(f);
  return TwoCochain::from_coordinates(f, sh, c);
}

NijenhuisPair identity_pair(const EmbeddingTensor& et) {
  return {Matrix::identity(et.field(), et.module_dim()), Matrix::identity(et.field(), et.algebra_dim())};
}

NijenhuisPair zero_pair(const EmbeddingTensor& et) {
  return {Matrix(et.field(), et.module_dim(), et.module_dim()), Matrix(et.field(), et.algebra_dim(), et.algebra_dim())};
}

}  // namespace

TEST(FirstOrder, ZeroTriplePasses) {
  for (const auto& [name, et] : fx::tensors(Q()))
    EXPECT_TRUE(check_first_order(et, TwoCochain::zero(Q(), adjoint_shape(et))).passed()) << name;
}

TEST(FirstOrder, ShapeAndBaseValidated) {
  const EmbeddingTensor et = fx::identity_on_adjoint(fx::sl2(Q()));
  EXPECT_THROW((void)check_first_order(et, TwoCochain::zero(Q(), {3, 3, 3, 2})), Error);
  const EmbeddingTensor bad(fx::aff1_line(Q()), mat(Q(), {{1}, {0}}));
  try {
    (void)check_first_order(bad, TwoCochain::zero(Q(), adjoint_shape(bad)));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotAnEmbeddingTensor);
  }
}

TEST(FirstOrder, IdentityPairOnSl2GivesBracketAndAction) {
  const AlgebraData g = fx::sl2(Q());
  const EmbeddingTensor et = fx::identity_on_adjoint(g);
  const DeformationTriple d = nijenhuis_to_deformation(et, identity_pair(et));
  EXPECT_TRUE(d.theta().is_zero());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(d.omega(i, j), g.product(i, j));
    EXPECT_EQ(d.nu()[i], et.rep().rho()[i]);
  }
  EXPECT_TRUE(check_first_order(et, d).passed());
}

TEST(FirstOrder, RandomNonCocycleFailsFirstGroup) {
  const EmbeddingTensor et = fx::identity_on_adjoint(fx::sl2(F(3)));
  RandomSource rng(21);
  const DeformationReport r = check_first_order(et, rng.two_cochain(F(3), adjoint_shape(et)));
  ASSERT_FALSE(r.order1.passed());
  std::size_t named = 0;
  for (const auto& c : r.order1.checks())
    if (!c.passed) named += c.violations.size();
  EXPECT_GT(named, 0u);
}

TEST(FirstOrder, AgreesWithNumericParameterOracle) {
  RandomSource rng(22);
  for (const Field& f : {Q(), F(5)})
    for (const auto& [name, et] : fx::tensors(f)) {
      if (et.algebra_dim() > 3) continue;
      std::size_t positives = 0, negatives = 0;
      for (int i = 0; i < 30; ++i) {
        DeformationTriple d = random_sparse(rng, f, adjoint_shape(et));
        if (i % 3 == 0) d = adjoint_coboundary(et, rng.matrix(f, et.module_dim(), et.module_dim()),
                                               rng.matrix(f, et.algebra_dim(), et.algebra_dim()));
        if (i % 3 == 1) d = TwoCochain::zero(f, adjoint_shape(et));
        const bool verdict = check_first_order(et, d).passed();
        EXPECT_EQ(verdict, valid_at_numeric_values(et, {{d}})) << name;
        (verdict ? positives : negatives) += 1;
      }
      EXPECT_GT(positives, 0u);
      EXPECT_GT(negatives, 0u) << name;
    }
}

TEST(FirstOrder, FirstGroupMatchesAdjointCocycleConditions) {
  RandomSource rng(23);
  CohomologyOptions o;
  o.verify_coefficients = false;
  for (const auto& [name, et] : fx::tensors(F(3))) {
    const EtRepresentation er = adjoint_coefficients(et);
    const auto basis = cocycle_space(er, o);
    for (int i = 0; i < 40; ++i) {
      DeformationTriple d = rng.two_cochain(F(3), adjoint_shape(et));
      if (i % 2) {
        d = TwoCochain::zero(F(3), d.shape());
        for (const auto& b : basis) d += TwoCochain::from_coordinates(F(3), d.shape(), rng.scalar(F(3)) * b.coordinates());
      }
      EXPECT_EQ(check_first_order(et, d).order1.passed(), is_cocycle(er, d, o).passed()) << name;
    }
  }
}

TEST(FirstOrder, CoboundariesPassFirstGroup) {
  RandomSource rng(24);
  for (const auto& [name, et] : fx::tensors(F(3)))
    for (int i = 0; i < 20; ++i) {
      const DeformationTriple d = adjoint_coboundary(et, rng.matrix(F(3), et.module_dim(), et.module_dim()),
                                                     rng.matrix(F(3), et.algebra_dim(), et.algebra_dim()));
      EXPECT_TRUE(check_first_order(et, d).order1.passed()) << name;
    }
}

TEST(Deform, CoefficientLists) {
  const EmbeddingTensor et = fx::identity_on_adjoint(fx::sl2(Q()));
  const DeformedStructure base = deform(et, {});
  EXPECT_EQ(base.order(), 0u);
  EXPECT_EQ(base.tensor[0], et.T());
  EXPECT_EQ(base.bracket[0], et.algebra());
  EXPECT_EQ(base.action[0], et.rep().rho());
  const DeformationTriple d = nijenhuis_to_deformation(et, identity_pair(et));
  const DeformedStructure s = deform(et, {{d, TwoCochain::zero(Q(), d.shape())}});
  ASSERT_EQ(s.order(), 2u);
  EXPECT_EQ(s.tensor[1], d.theta());
  EXPECT_EQ(s.action[1], d.nu());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(s.bracket[1].product(i, j), d.omega(i, j));
      EXPECT_TRUE(is_zero(s.bracket[2].product(i, j)));
    }
}

TEST(Formal, ZeroDeformationReproducesBaseChecks) {
  RandomSource rng(25);
  for (const auto& [name, r] : fx::representations(F(3))) {
    if (r.algebra_dim() > 3) continue;
    for (int i = 0; i < 10; ++i) {
      const EmbeddingTensor et(r, rng.matrix(F(3), r.algebra_dim(), r.module_dim()));
      const FormalReport f = check_formal(et, {});
      ASSERT_EQ(f.degrees.size(), 1u);
      EXPECT_EQ(f.degrees[0].check("tensor_series").passed, check_embedding_tensor(et).passed()) << name;
      EXPECT_TRUE(f.degrees[0].check("sagle_series").passed);
      EXPECT_TRUE(f.degrees[0].check("representation_series").passed);
      EXPECT_EQ(f.passed(), check_embedding_tensor(et).passed());
    }
  }
  const AlgebraData broken = AlgebraData::skew(
      Q(), 3, {{0, 1, vec(Q(), {0, 2, 0})}, {0, 2, vec(Q(), {0, 0, -2})}, {1, 2, vec(Q(), {1, 1, 0})}});
  const Representation trivial(broken, 1, std::vector<Matrix>(3, Matrix(Q(), 1, 1)));
  EXPECT_FALSE(check_formal(EmbeddingTensor(trivial, Matrix(Q(), 3, 1)), {}).degrees[0].check("sagle_series").passed);
}

TEST(Formal, DegreesAgreeWithFirstOrderGroups) {
  RandomSource rng(26);
  for (const auto& [name, et] : fx::tensors(F(3))) {
    if (et.algebra_dim() > 3) continue;
    for (int i = 0; i < 100; ++i) {
      const DeformationTriple d = i % 2 ? rng.two_cochain(F(3), adjoint_shape(et))
                                        : adjoint_coboundary(et, rng.matrix(F(3), et.module_dim(), et.module_dim()),
                                                             rng.matrix(F(3), et.algebra_dim(), et.algebra_dim()));
      const DeformationReport first = check_first_order(et, d);
      const FormalReport formal = check_formal(et, {{d}});
      ASSERT_EQ(formal.degrees.size(), 4u);
      const VerificationReport* groups[] = {&first.order1, &first.order2, &first.order3};
      for (std::size_t k = 1; k <= 3; ++k) {
        const std::string suffix = std::to_string(k);
        EXPECT_EQ(formal.degrees[k].check("tensor_series").passed, groups[k - 1]->check("tensor_order" + suffix).passed);
        EXPECT_EQ(formal.degrees[k].check("sagle_series").passed, groups[k - 1]->check("bracket_order" + suffix).passed);
        EXPECT_EQ(formal.degrees[k].check("representation_series").passed,
                  groups[k - 1]->check("action_order" + suffix).passed);
      }
    }
  }
}

TEST(Formal, FirstGroupAloneIsNotEnough) {
  // Search over F3 for a triple that satisfies the cocycle group but not the full deformation.
  RandomSource rng(27);
  bool found = false;
  for (const auto& [name, et] : fx::tensors(F(3))) {
    for (int i = 0; i < 200 && !found; ++i) {
      const DeformationTriple d = adjoint_coboundary(et, rng.matrix(F(3), et.module_dim(), et.module_dim()),
                                                     rng.matrix(F(3), et.algebra_dim(), et.algebra_dim()));
      const DeformationReport r = check_first_order(et, d);
      if (r.passed()) continue;
      ASSERT_TRUE(r.order1.passed());
      const FormalReport f = check_formal(et, {{d}});
      EXPECT_TRUE(f.degrees[1].passed());
      EXPECT_FALSE(f.degrees[2].passed() && f.degrees[3].passed());
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Formal, SecondOrderFamiliesAgreeWithNumericOracle) {
  RandomSource rng(28);
  for (const auto& [name, et] : fx::tensors(Q())) {
    if (et.algebra_dim() > 2) continue;
    for (int i = 0; i < 10; ++i) {
      const CochainShape sh = adjoint_shape(et);
      FormalDeformation f{{random_sparse(rng, Q(), sh), random_sparse(rng, Q(), sh)}};
      if (i % 2) f.terms[1] = TwoCochain::zero(Q(), sh);
      if (i % 5 == 0) f.terms = {TwoCochain::zero(Q(), sh), TwoCochain::zero(Q(), sh)};
      EXPECT_EQ(check_formal(et, f).passed(), valid_at_numeric_values(et, f)) << name;
    }
  }
  const EmbeddingTensor sl2 = fx::identity_on_adjoint(fx::sl2(Q()));
  const DeformationTriple d = nijenhuis_to_deformation(sl2, identity_pair(sl2));
  const FormalDeformation square{{d + d, d}};
  EXPECT_TRUE(check_formal(sl2, square).passed());
  EXPECT_TRUE(valid_at_numeric_values(sl2, square));
}

TEST(Nijenhuis, ZeroAndIdentityPairs) {
  for (const auto& [name, et] : fx::tensors(Q())) {
    for (const NijenhuisPair& N : {zero_pair(et), identity_pair(et)}) {
      EXPECT_TRUE(is_nijenhuis(et, N).passed()) << name;
      const DeformationTriple d = nijenhuis_to_deformation(et, N);
      EXPECT_TRUE(check_first_order(et, d).passed()) << name;
      EXPECT_TRUE(check_trivial_morphism(et, d, N).passed()) << name;
    }
    EXPECT_TRUE(nijenhuis_to_deformation(et, zero_pair(et)).is_zero());
  }
}

TEST(Nijenhuis, NonNijenhuisRefused) {
  const EmbeddingTensor et = fx::identity_on_adjoint(fx::sl2(Q()));
  const NijenhuisPair N{Matrix::identity(Q(), 3), mat(Q(), {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})};
  ASSERT_FALSE(is_nijenhuis(et, N).passed());
  try {
    (void)nijenhuis_to_deformation(et, N);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotNijenhuis);
  }
}

TEST(Nijenhuis, CensusPairsDeformTrivially) {
  const EmbeddingTensor et = fx::identity_on_adjoint(fx::aff1(F(2)));
  const NijenhuisCensus census = enumerate_nijenhuis(et);
  EXPECT_EQ(census.candidates, 256u);
  EXPECT_FALSE(census.pairs.empty());
  for (const auto& N : census.pairs) {
    ASSERT_TRUE(is_nijenhuis(et, N).passed());
    const DeformationTriple d = nijenhuis_to_deformation(et, N);
    EXPECT_TRUE(check_first_order(et, d).passed());
    EXPECT_TRUE(check_trivial_morphism(et, d, N).passed());
  }
}

TEST(TrivialMorphism, NontrivialClassAdmitsNoMorphism) {
  const Field f = F(3);
  const EmbeddingTensor et = fx::zero_tensor(adjoint_rep(fx::aff1(f)));
  CohomologyOptions o;
  o.verify_coefficients = false;
  const H2Result r = h2(adjoint_coefficients(et), o);
  ASSERT_GT(r.dimension, 0u);
  const DeformationTriple& d = r.representatives.front();
  ASSERT_TRUE(check_first_order(et, d).order1.passed());
  std::size_t index = 0;
  for (; index < 6561; ++index) {
    std::size_t rest = index;
    NijenhuisPair N{Matrix(f, 2, 2), Matrix(f, 2, 2)};
    for (Matrix* part : {&N.N0, &N.N1})
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t row = 0; row < 2; ++row, rest /= 3) part->at(row, c) = s(f, static_cast<long>(rest % 3));
    if (check_trivial_morphism(et, d, N).passed()) break;
  }
  EXPECT_EQ(index, 6561u);
}

TEST(Cohomologous, DefiningCases) {
  RandomSource rng(29);
  const EmbeddingTensor et = fx::zero_tensor(adjoint_rep(fx::aff1(Q())));
  const CochainShape sh = adjoint_shape(et);
  const Matrix zero0(Q(), 2, 2), zero1(Q(), 2, 2);
  const DeformationTriple d1 = rng.two_cochain(Q(), sh);
  EXPECT_TRUE(first_order_cohomologous(et, d1, d1, zero0, zero1));
  const Matrix phi = rng.matrix(Q(), 2, 2), psi = rng.matrix(Q(), 2, 2);
  EXPECT_TRUE(first_order_cohomologous(et, d1, d1 - adjoint_coboundary(et, phi, psi), phi, psi));
  CohomologyOptions o;
  o.verify_coefficients = false;
  const H2Result r = h2(adjoint_coefficients(et), o);
  ASSERT_GE(r.representatives.size(), 2u);
  for (int i = 0; i < 20; ++i)
    EXPECT_FALSE(first_order_cohomologous(et, r.representatives[0], r.representatives[1], rng.matrix(Q(), 2, 2),
                                          rng.matrix(Q(), 2, 2)));
}

TEST(Rigidity, Wording) {
  const RigidityReport sl2 = rigidity_report(fx::identity_on_adjoint(fx::sl2(Q())));
  EXPECT_TRUE(sl2.rigid);
  EXPECT_NE(sl2.to_text().find("rigid (sufficient condition met)"), std::string::npos);

  const RigidityReport empty = rigidity_report(fx::zero_tensor(trivial_rep(fx::abelian(Q(), 0), 0)));
  EXPECT_TRUE(empty.rigid);
  EXPECT_EQ(empty.cohomology.cochain_dim, 0u);

  const EmbeddingTensor abelian = fx::zero_tensor(trivial_rep(fx::abelian(Q(), 2), 2));
  const RigidityReport flat = rigidity_report(abelian);
  EXPECT_FALSE(flat.rigid);
  EXPECT_EQ(flat.cohomology.dimension, flat.cohomology.cochain_dim);
  EXPECT_NE(flat.to_text().find("rigidity not concluded"), std::string::npos);
  EXPECT_EQ(flat.to_text().find("not rigid"), std::string::npos);

  const EmbeddingTensor aff1 = fx::zero_tensor(adjoint_rep(fx::aff1(Q())));
  const RigidityReport r = rigidity_report(aff1);
  EXPECT_EQ(r.cohomology.dimension, 5u);
  EXPECT_EQ(r.cohomology.representatives.size(), 5u);
}
