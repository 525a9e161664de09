#pragma once

#include <initializer_list>
#include <vector>

#include "malcev/matrix.hpp"

namespace malcev::testing {

inline Field Q() { return Field::rational(); }
inline Field F(std::uint64_t p) { return Field::prime(p); }

inline Scalar s(const Field& f, long v) { return Scalar::from_int(f, v); }

inline Vector vec(const Field& f, std::initializer_list<long> values) {
  Vector out;
  for (long v : values) out.push_back(Scalar::from_int(f, v));
  return out;
}

inline Matrix mat(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    rs.push_back(vec(f, r));
    cols = r.size();
  }
  return Matrix::from_rows(f, cols, rs);
}

inline Vector e(const Field& f, std::size_t n, std::size_t i) { return unit_vector(f, n, i); }

}  // namespace malcev::testing
