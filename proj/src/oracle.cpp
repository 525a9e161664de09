#include "malcev/oracle.hpp"

#include <map>
#include <string>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

namespace {

using Ints = std::vector<std::uint32_t>;

std::uint32_t oracle_prime(const Field& f) {
  if (!f.is_prime() || f.modulus() > kOracleMaxPrime)
    throw Error(ErrorCode::UnsupportedField,
                "enumeration runs over F_p with p <= " + std::to_string(kOracleMaxPrime));
  return f.modulus();
}

std::uint64_t candidate_count(std::uint32_t p, std::size_t digits) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    total *= p;
    if (total > kOracleMaxCandidates)
      throw Error(ErrorCode::TooLarge, std::to_string(p) + "^" + std::to_string(digits) +
                                           " candidates exceed the limit of 2^20");
  }
  return total;
}

/// Row-major residues of a matrix.
Ints residues(const Matrix& m) {
  Ints out;
  for (const auto& s : m.entries()) out.push_back(s.residue());
  return out;
}

/// Advances little-endian digits base p; false after the last candidate.
bool increment(Ints& digits, std::uint32_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

/// A column-major digit block read back as a matrix.
Matrix block_matrix(const Field& f, const Ints& digits, std::size_t offset, std::size_t rows,
                    std::size_t cols) {
  Matrix out(f, rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      out.at(r, c) = Scalar::from_int(f, digits[offset + c * rows + r]);
  return out;
}

/// Structure constants and action as flat residue tables.
struct IntStructure {
  std::uint32_t p;
  std::size_t n, m;
  Ints c;    // c[(i*n + j)*n + k]: coefficient of e_k in [e_i, e_j]
  Ints rho;  // rho[(i*m + r)*m + s]: coefficient of f_r in rho(e_i) f_s

  explicit IntStructure(const Representation& r)
      : p(oracle_prime(r.field())), n(r.algebra_dim()), m(r.module_dim()) {
    c.assign(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = r.algebra().product(i, j)[k].residue();
    rho.assign(n * m * m, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) rho[(i * m + a) * m + b] = r.rho()[i].at(a, b).residue();
  }

  Ints bracket(const Ints& x, const Ints& y) const {
    Ints out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j]) continue;
        const std::uint64_t s = std::uint64_t{x[i]} * y[j] % p;
        for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + s * c[(i * n + j) * n + k]) % p;
      }
    }
    return out;
  }

  Ints act(const Ints& x, const Ints& v) const {
    Ints out(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          out[a] = (out[a] + std::uint64_t{x[i]} * rho[(i * m + a) * m + b] % p * v[b]) % p;
    }
    return out;
  }
};

/// y = A x for a column-major digit block A (rows x cols) at offset.
Ints apply_block(const Ints& digits, std::size_t offset, std::size_t rows, std::size_t cols,
                 const Ints& x, std::uint32_t p) {
  Ints out(rows, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (!x[c]) continue;
    for (std::size_t r = 0; r < rows; ++r)
      out[r] = (out[r] + std::uint64_t{digits[offset + c * rows + r]} * x[c]) % p;
  }
  return out;
}

Ints unit(std::size_t n, std::size_t i) {
  Ints u(n, 0);
  u[i] = 1;
  return u;
}

Ints difference(const Ints& a, const Ints& b, std::uint32_t p) {
  Ints out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + p - b[i]) % p;
  return out;
}

Ints sum(const Ints& a, const Ints& b, std::uint32_t p) {
  Ints out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

}  // namespace

EtCensus enumerate_ets(const Representation& r) {
  const IntStructure s(r);
  const std::size_t n = s.n, m = s.m;
  EtCensus out;
  out.candidates = candidate_count(s.p, n * m);
  Ints digits(n * m, 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      const Ints Ta = apply_block(digits, 0, n, m, unit(m, a), s.p);
      for (std::size_t b = 0; b < m && ok; ++b) {
        const Ints Tb = apply_block(digits, 0, n, m, unit(m, b), s.p);
        const Ints rhs = apply_block(digits, 0, n, m, s.act(Ta, unit(m, b)), s.p);
        ok = s.bracket(Ta, Tb) == rhs;
      }
    }
    if (ok) out.tensors.push_back(block_matrix(r.field(), digits, 0, n, m));
  } while (increment(digits, s.p));
  return out;
}

NijenhuisCensus enumerate_nijenhuis(const EmbeddingTensor& et) {
  const IntStructure s(et.rep());
  const std::size_t n = s.n, m = s.m, p = s.p;
  const Ints T = residues(et.T());
  auto applyT = [&](const Ints& v) {
    Ints out(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) out[r] = (out[r] + std::uint64_t{T[r * m + c]} * v[c]) % p;
    return out;
  };
  NijenhuisCensus out;
  out.candidates = candidate_count(s.p, m * m + n * n);
  Ints digits(m * m + n * n, 0);
  const std::size_t off1 = m * m;
  do {
    auto N0 = [&](const Ints& v) { return apply_block(digits, 0, m, m, v, s.p); };
    auto N1 = [&](const Ints& x) { return apply_block(digits, off1, n, n, x, s.p); };
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) {
      const Ints v = unit(m, k);
      ok = N1(difference(applyT(N0(v)), N1(applyT(v)), s.p)) == Ints(n, 0);
    }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        const Ints x = unit(n, i), y = unit(n, j), Nx = N1(x), Ny = N1(y);
        const Ints xy_n =
            difference(sum(s.bracket(Nx, y), s.bracket(x, Ny), s.p), N1(s.bracket(x, y)), s.p);
        ok = N1(xy_n) == s.bracket(Nx, Ny);
      }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t k = 0; k < m && ok; ++k) {
        const Ints x = unit(n, i), v = unit(m, k), Nx = N1(x), Nv = N0(v);
        const Ints xv_n = difference(sum(s.act(Nx, v), s.act(x, Nv), s.p), N0(s.act(x, v)), s.p);
        ok = N0(xv_n) == s.act(Nx, Nv);
      }
    if (ok)
      out.pairs.push_back({block_matrix(et.field(), digits, 0, m, m),
                           block_matrix(et.field(), digits, off1, n, n)});
  } while (increment(digits, s.p));
  return out;
}

namespace {

/// A x restricted to columns [begin, end), with x given by digits.
Ints partial_product(const Ints& entries, std::size_t rows, std::size_t cols, std::size_t begin,
                     const Ints& x, std::uint32_t p) {
  Ints out(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += std::uint64_t{entries[r * cols + begin + c]} * x[c];
    out[r] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

}  // namespace

std::uint64_t kernel_count(const Matrix& a) {
  const std::uint32_t p = oracle_prime(a.field());
  const std::size_t rows = a.rows(), cols = a.cols();
  const Ints entries = residues(a);
  std::uint64_t count = 0;
  bool direct = true;
  try {
    candidate_count(p, cols);
  } catch (const Error&) {
    direct = false;
  }
  if (direct) {
    Ints x(cols, 0);
    do {
      if (partial_product(entries, rows, cols, 0, x, p) == Ints(rows, 0)) ++count;
    } while (increment(x, p));
    return count;
  }
  // Split the columns: A x + B y = 0 iff A x = -B y. Tabulate one side,
  // then look up the other.
  const std::size_t half = (cols + 1) / 2;
  candidate_count(p, half);
  std::map<Ints, std::uint64_t> left;
  Ints x(half, 0);
  do {
    ++left[partial_product(entries, rows, cols, 0, x, p)];
  } while (increment(x, p));
  Ints y(cols - half, 0);
  do {
    Ints v = partial_product(entries, rows, cols, half, y, p);
    for (auto& e : v) e = (p - e) % p;
    auto it = left.find(v);
    if (it != left.end()) count += it->second;
  } while (increment(y, p));
  return count;
}

Scalar RandomSource::scalar(const Field& f) {
  if (f.is_prime()) return Scalar::from_int(f, static_cast<long>(engine_() % f.modulus()));
  return Scalar::from_int(f, static_cast<long>(engine_() % 5) - 2);
}

Vector RandomSource::vector(const Field& f, std::size_t n) {
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(f));
  return out;
}

Matrix RandomSource::matrix(const Field& f, std::size_t rows, std::size_t cols) {
  Matrix out(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = scalar(f);
  return out;
}

AlgebraData RandomSource::skew_algebra(const Field& f, std::size_t n) {
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) entries.push_back({i, j, vector(f, n)});
  return AlgebraData::skew(f, n, entries);
}

TwoCochain RandomSource::two_cochain(const Field& f, const CochainShape& s) {
  return TwoCochain::from_coordinates(f, s, vector(f, s.two_cochain_size()));
}

OneCochain RandomSource::one_cochain(const Field& f, const CochainShape& s) {
  return OneCochain::from_coordinates(f, s, vector(f, s.one_cochain_size()));
}

NijenhuisPair RandomSource::pair(const Field& f, std::size_t n, std::size_t m) {
  Matrix N0 = matrix(f, m, m);
  return {std::move(N0), matrix(f, n, n)};
}

std::optional<EmbeddingTensor> RandomSource::embedding_tensor(const Field& f, std::size_t max_dim,
                                                              std::size_t attempts) {
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const std::size_t n = 1 + below(max_dim), m = 1 + below(max_dim);
    AlgebraData g = skew_algebra(f, n);
    if (!check_malcev(g).passed()) continue;
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < n; ++i) rho.push_back(below(2) ? matrix(f, m, m) : Matrix(f, m, m));
    Representation r(std::move(g), m, std::move(rho));
    if (!check_representation(r, Preconditions::Assume).passed()) continue;
    EmbeddingTensor et(std::move(r), matrix(f, n, m));
    if (check_embedding_tensor(et, Preconditions::Assume).passed()) return et;
  }
  return std::nullopt;
}

std::optional<EtRepresentation> RandomSource::et_representation(const EmbeddingTensor& base,
                                                                std::size_t max_dim,
                                                                std::size_t attempts) {
  const Field& f = base.field();
  const std::size_t n = base.algebra_dim(), m = base.module_dim();
  // Each block is zero or uniformly random with equal odds.
  auto block = [&](std::size_t rows, std::size_t cols) {
    return below(2) ? matrix(f, rows, cols) : Matrix(f, rows, cols);
  };
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const std::size_t v = 1 + below(max_dim), w = 1 + below(max_dim);
    Matrix Tp = block(w, v);
    std::vector<Matrix> rho1, rho2, rho3;
    for (std::size_t i = 0; i < n; ++i) rho1.push_back(block(v, v));
    for (std::size_t i = 0; i < n; ++i) rho2.push_back(block(w, w));
    for (std::size_t k = 0; k < m; ++k) rho3.push_back(block(v, w));
    EtRepresentation er(base, v, w, std::move(Tp), std::move(rho1), std::move(rho2), std::move(rho3));
    if (check_et_representation(er, Preconditions::Assume).passed()) return er;
  }
  return std::nullopt;
}

}  // namespace malcev
