#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "malcev/cochain.hpp"
#include "malcev/deformation.hpp"
#include "malcev/et_representation.hpp"

namespace malcev {

/// Brute-force counterparts of the library checks over F_p, p <= 5, with
/// their own integer arithmetic. Candidates are listed in canonical order:
/// the coordinates of a candidate are read column-major (matrix after
/// matrix) as little-endian digits base p of its index.
constexpr std::uint32_t kOracleMaxPrime = 5;
constexpr std::uint64_t kOracleMaxCandidates = std::uint64_t{1} << 20;

struct EtCensus {
  std::uint64_t candidates = 0;
  std::vector<Matrix> tensors;
  std::size_t count() const { return tensors.size(); }
};

/// Every T: M -> g with [Tm, Tn] = T(rho(Tm)n). Throws UnsupportedField
/// over Q or p > 5, TooLarge if p^(nm) exceeds 2^20.
EtCensus enumerate_ets(const Representation& r);

struct NijenhuisCensus {
  std::uint64_t candidates = 0;
  std::vector<NijenhuisPair> pairs;
  std::size_t count() const { return pairs.size(); }
};

/// Every (N0, N1) passing the three Nijenhuis conditions; the digits of N0
/// come before those of N1. Same refusals as enumerate_ets with p^(n^2+m^2).
NijenhuisCensus enumerate_nijenhuis(const EmbeddingTensor& et);

/// Number of x with m x = 0, by enumeration. When p^cols exceeds 2^20 the
/// columns are split in two halves and the products of each half are
/// matched; refused (TooLarge) if a half still has more than 2^20 candidates.
std::uint64_t kernel_count(const Matrix& m);

/// Seeded source of random objects, deterministic for a given seed.
/// The engine is std::mt19937_64; a residue is the raw 64-bit output mod p,
/// a rational sample is (output mod 5) - 2.
class RandomSource {
 public:
  static constexpr const char* algorithm = "mt19937_64";

  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  Scalar scalar(const Field& f);
  Vector vector(const Field& f, std::size_t n);
  Matrix matrix(const Field& f, std::size_t rows, std::size_t cols);
  /// Random structure constants for i < j.
  AlgebraData skew_algebra(const Field& f, std::size_t n);
  TwoCochain two_cochain(const Field& f, const CochainShape& s);
  OneCochain one_cochain(const Field& f, const CochainShape& s);
  NijenhuisPair pair(const Field& f, std::size_t n, std::size_t m);

  /// A verified embedding tensor with algebra and module dimension at most
  /// max_dim, by rejection; nullopt if every attempt fails.
  std::optional<EmbeddingTensor> embedding_tensor(const Field& f, std::size_t max_dim,
                                                  std::size_t attempts = 200);
  /// Coefficients of dimensions at most max_dim over base that pass
  /// check_et_representation, by rejection; nullopt if every attempt fails.
  std::optional<EtRepresentation> et_representation(const EmbeddingTensor& base,
                                                    std::size_t max_dim,
                                                    std::size_t attempts = 200);

 private:
  std::size_t below(std::size_t bound) { return bound == 0 ? 0 : engine_() % bound; }

  std::mt19937_64 engine_;
};

}  // namespace malcev
