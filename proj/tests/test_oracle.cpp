#include <gtest/gtest.h>

#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/oracle.hpp"
#include "support.hpp"

using namespace malcev;
using namespace malcev::testing;
namespace fx = malcev::fixtures;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(KernelCount, Examples) {
  EXPECT_EQ(kernel_count(Matrix::identity(F(5), 3)), 1u);
  EXPECT_EQ(kernel_count(Matrix(F(3), 2, 4)), 81u);
  EXPECT_EQ(kernel_count(mat(F(5), {{1, 2}, {2, 4}})), 5u);
}

TEST(KernelCount, PowerOfRankDeficiency) {
  RandomSource rng(31);
  for (std::uint64_t p : {2, 3, 5})
    for (int i = 0; i < 30; ++i) {
      const std::size_t r = rng.next() % 5, c = 1 + rng.next() % 6;
      const Matrix m = rng.matrix(F(p), r, c);
      std::uint64_t expected = 1;
      for (std::size_t k = rank(m); k < c; ++k) expected *= p;
      EXPECT_EQ(kernel_count(m), expected);
    }
}

TEST(KernelCount, SplitEnumerationBeyondCap) {
  // 5^14 candidates, counted by matching the two halves.
  RandomSource rng(32);
  const Matrix m = rng.matrix(F(5), 9, 14);
  std::uint64_t expected = 1;
  for (std::size_t k = rank(m); k < 14; ++k) expected *= 5;
  EXPECT_EQ(kernel_count(m), expected);
}

TEST(KernelCount, Refusals) {
  EXPECT_EQ(code_of([] { (void)kernel_count(Matrix::identity(Q(), 2)); }), ErrorCode::UnsupportedField);
  EXPECT_EQ(code_of([] { (void)kernel_count(Matrix::identity(F(7), 2)); }), ErrorCode::UnsupportedField);
  EXPECT_EQ(code_of([] { (void)kernel_count(Matrix(F(5), 1, 18)); }), ErrorCode::TooLarge);
}

TEST(EnumerateEts, Refusals) {
  EXPECT_EQ(code_of([] { (void)enumerate_ets(adjoint_rep(fx::aff1(Q()))); }), ErrorCode::UnsupportedField);
  EXPECT_EQ(code_of([] { (void)enumerate_ets(trivial_rep(fx::abelian(F(5), 3), 3)); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { (void)enumerate_nijenhuis(fx::identity_on_adjoint(fx::sl2(F(3)))); }),
            ErrorCode::TooLarge);
}

TEST(EnumerateEts, AbelianTrivialCountsEveryMap) {
  for (std::uint64_t p : {2, 3, 5}) {
    const EtCensus c = enumerate_ets(trivial_rep(fx::abelian(F(p), 2), 2));
    EXPECT_EQ(c.count(), p * p * p * p);
    EXPECT_EQ(c.candidates, c.count());
  }
}

TEST(EnumerateEts, CanonicalOrder) {
  const EtCensus c = enumerate_ets(trivial_rep(fx::abelian(F(2), 2), 1));
  ASSERT_EQ(c.count(), 4u);
  EXPECT_EQ(c.tensors[0], mat(F(2), {{0}, {0}}));
  EXPECT_EQ(c.tensors[1], mat(F(2), {{1}, {0}}));
  EXPECT_EQ(c.tensors[2], mat(F(2), {{0}, {1}}));
  EXPECT_EQ(c.tensors[3], mat(F(2), {{1}, {1}}));
}

TEST(EnumerateEts, PassSetMatchesLibraryCheck) {
  for (std::uint64_t p : {2, 3})
    for (const auto& [name, r] : fx::representations(F(p))) {
      if (r.algebra_dim() * r.module_dim() > 9) continue;
      const EtCensus census = enumerate_ets(r);
      std::size_t library = 0;
      for (const auto& T : census.tensors) EXPECT_TRUE(check_embedding_tensor(EmbeddingTensor(r, T)).passed());
      for (std::uint64_t index = 0; index < census.candidates; ++index) {
        Matrix T(F(p), r.algebra_dim(), r.module_dim());
        std::uint64_t rest = index;
        for (std::size_t c = 0; c < T.cols(); ++c)
          for (std::size_t row = 0; row < T.rows(); ++row, rest /= p) T.at(row, c) = s(F(p), static_cast<long>(rest % p));
        library += check_embedding_tensor(EmbeddingTensor(r, T)).passed();
      }
      EXPECT_EQ(library, census.count()) << name;
    }
}

TEST(EnumerateNijenhuis, ContainsZeroAndIdentity) {
  for (const auto& [name, et] : fx::tensors(F(2))) {
    const std::size_t n = et.algebra_dim(), m = et.module_dim();
    if (n * n + m * m > 20) continue;
    const NijenhuisCensus c = enumerate_nijenhuis(et);
    bool zero = false, identity = false;
    for (const auto& N : c.pairs) {
      EXPECT_TRUE(is_nijenhuis(et, N).passed());
      zero = zero || (N.N0.is_zero() && N.N1.is_zero());
      identity = identity || (N.N0 == Matrix::identity(F(2), m) && N.N1 == Matrix::identity(F(2), n));
    }
    EXPECT_TRUE(zero) << name;
    EXPECT_TRUE(identity) << name;
  }
}

TEST(EnumerateNijenhuis, AbelianPairsOnlyNeedKernelCondition) {
  const EmbeddingTensor et = fx::zero_tensor(trivial_rep(fx::abelian(F(3), 1), 2));
  EXPECT_EQ(enumerate_nijenhuis(et).count(), 243u);
}

TEST(RandomSource, SameSeedSameStream) {
  RandomSource a(2024), b(2024);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(a.next(), b.next());
    EXPECT_EQ(a.matrix(F(3), 2, 3), b.matrix(F(3), 2, 3));
    EXPECT_EQ(a.two_cochain(Q(), {2, 1, 1, 1}), b.two_cochain(Q(), {2, 1, 1, 1}));
  }
  EXPECT_EQ(std::string(RandomSource::algorithm), "mt19937_64");
}

TEST(RandomSource, DifferentSeedsDiffer) {
  for (std::uint64_t seed : {1, 2, 3, 5, 7, 11, 2024}) {
    RandomSource a(seed), b(seed + 1);
    EXPECT_NE(a.next(), b.next());
  }
}

TEST(RandomSource, ZeroDimensionShapes) {
  RandomSource rng(1);
  EXPECT_EQ(rng.matrix(F(3), 0, 0).rows(), 0u);
  EXPECT_TRUE(rng.vector(F(3), 0).empty());
  EXPECT_TRUE(rng.two_cochain(F(3), {0, 0, 0, 0}).coordinates().empty());
  EXPECT_TRUE(rng.one_cochain(F(3), {0, 0, 0, 0}).coordinates().empty());
  EXPECT_EQ(rng.skew_algebra(F(3), 0).dim(), 0u);
}

TEST(RandomSource, SamplersReturnVerifiedObjects) {
  RandomSource rng(33);
  for (int i = 0; i < 10; ++i) {
    const auto et = rng.embedding_tensor(F(3), 2);
    ASSERT_TRUE(et);
    EXPECT_TRUE(check_embedding_tensor(*et).passed());
    const auto er = rng.et_representation(*et, 2);
    ASSERT_TRUE(er);
    EXPECT_TRUE(check_et_representation(*er).passed());
  }
}
