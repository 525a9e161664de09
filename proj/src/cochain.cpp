#include "malcev/cochain.hpp"

#include <string>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

std::size_t CochainShape::pair_index(std::size_t i, std::size_t j) const {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

TwoCochain::TwoCochain(const Field& f, const CochainShape& s, Matrix theta,
                       std::vector<Vector> omega, std::vector<Matrix> nu)
    : field_(f), shape_(s), theta_(std::move(theta)), omega_(std::move(omega)),
      nu_(std::move(nu)) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::ShapeError, what); };
  if (theta_.rows() != s.w || theta_.cols() != s.m)
    bad("theta must be " + std::to_string(s.w) + "x" + std::to_string(s.m));
  if (theta_.field() != f) throw Error(ErrorCode::FieldMismatch, "theta over a different field");
  theta_.validate();
  if (omega_.size() != s.pair_count())
    bad("omega must have " + std::to_string(s.pair_count()) + " pair entries");
  for (const auto& o : omega_) {
    if (o.size() != s.w) bad("omega values must have length " + std::to_string(s.w));
    for (const auto& x : o)
      if (x.field() != f) throw Error(ErrorCode::FieldMismatch, "omega over a different field");
  }
  if (nu_.size() != s.n) bad("nu must have " + std::to_string(s.n) + " matrices");
  for (auto& m : nu_) {
    if (m.rows() != s.v || m.cols() != s.m)
      bad("nu matrices must be " + std::to_string(s.v) + "x" + std::to_string(s.m));
    if (m.field() != f) throw Error(ErrorCode::FieldMismatch, "nu over a different field");
    m.validate();
  }
}

TwoCochain TwoCochain::zero(const Field& f, const CochainShape& s) {
  return TwoCochain(f, s, Matrix(f, s.w, s.m), std::vector<Vector>(s.pair_count(), zero_vector(f, s.w)),
                    std::vector<Matrix>(s.n, Matrix(f, s.v, s.m)));
}

TwoCochain TwoCochain::from_coordinates(const Field& f, const CochainShape& s, const Vector& c) {
  if (c.size() != s.two_cochain_size())
    throw Error(ErrorCode::ShapeError, "two-cochain needs " + std::to_string(s.two_cochain_size()) +
                                           " coordinates");
  TwoCochain z = zero(f, s);
  std::size_t k = 0;
  for (std::size_t r = 0; r < s.w; ++r)
    for (std::size_t col = 0; col < s.m; ++col) z.theta_.at(r, col) = c[k++];
  for (auto& o : z.omega_)
    for (auto& x : o) x = c[k++];
  for (auto& m : z.nu_)
    for (std::size_t col = 0; col < s.m; ++col)
      for (std::size_t r = 0; r < s.v; ++r) m.at(r, col) = c[k++];
  return z;
}

Vector TwoCochain::coordinates() const {
  Vector c;
  c.reserve(shape_.two_cochain_size());
  for (const auto& x : theta_.entries()) c.push_back(x);
  for (const auto& o : omega_) c.insert(c.end(), o.begin(), o.end());
  for (const auto& m : nu_)
    for (std::size_t col = 0; col < shape_.m; ++col)
      for (std::size_t r = 0; r < shape_.v; ++r) c.push_back(m.at(r, col));
  return c;
}

Vector TwoCochain::omega(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vector(field_, shape_.w);
  if (i < j) return omega_[shape_.pair_index(i, j)];
  return -omega_[shape_.pair_index(j, i)];
}

void TwoCochain::set_omega(std::size_t i, std::size_t j, const Vector& value) {
  if (i == j || i >= shape_.n || j >= shape_.n || value.size() != shape_.w)
    throw Error(ErrorCode::ShapeError, "invalid omega assignment");
  if (i < j)
    omega_[shape_.pair_index(i, j)] = value;
  else
    omega_[shape_.pair_index(j, i)] = -value;
}

Vector TwoCochain::omega(const Vector& x, const Vector& y) const {
  if (x.size() != shape_.n || y.size() != shape_.n)
    throw Error(ErrorCode::ShapeError, "omega arguments of wrong length");
  Vector out = zero_vector(field_, shape_.w);
  for (std::size_t i = 0; i < shape_.n; ++i)
    for (std::size_t j = i + 1; j < shape_.n; ++j) {
      if ((x[i].is_zero() || y[j].is_zero()) && (x[j].is_zero() || y[i].is_zero())) continue;
      const Scalar coeff = x[i] * y[j] - x[j] * y[i];
      if (!coeff.is_zero()) axpy(out, coeff, omega_[shape_.pair_index(i, j)]);
    }
  return out;
}

Matrix TwoCochain::nu_at(const Vector& x) const {
  if (x.size() != shape_.n) throw Error(ErrorCode::ShapeError, "nu argument of wrong length");
  Matrix out(field_, shape_.v, shape_.m);
  for (std::size_t i = 0; i < shape_.n; ++i)
    if (!x[i].is_zero()) out += x[i] * nu_[i];
  return out;
}

Vector TwoCochain::nu(const Vector& x, const Vector& m) const { return nu_at(x).apply(m); }

bool TwoCochain::is_zero() const {
  if (!theta_.is_zero()) return false;
  for (const auto& o : omega_)
    if (!malcev::is_zero(o)) return false;
  for (const auto& m : nu_)
    if (!m.is_zero()) return false;
  return true;
}

TwoCochain& TwoCochain::operator+=(const TwoCochain& o) {
  if (!(shape_ == o.shape_)) throw Error(ErrorCode::ShapeError, "cochain shapes differ");
  theta_ += o.theta_;
  for (std::size_t k = 0; k < omega_.size(); ++k) omega_[k] += o.omega_[k];
  for (std::size_t k = 0; k < nu_.size(); ++k) nu_[k] += o.nu_[k];
  return *this;
}

TwoCochain& TwoCochain::operator-=(const TwoCochain& o) {
  if (!(shape_ == o.shape_)) throw Error(ErrorCode::ShapeError, "cochain shapes differ");
  theta_ -= o.theta_;
  for (std::size_t k = 0; k < omega_.size(); ++k) omega_[k] -= o.omega_[k];
  for (std::size_t k = 0; k < nu_.size(); ++k) nu_[k] -= o.nu_[k];
  return *this;
}

OneCochain OneCochain::zero(const Field& f, const CochainShape& s) {
  return {Matrix(f, s.v, s.m), Matrix(f, s.w, s.n)};
}

OneCochain OneCochain::from_coordinates(const Field& f, const CochainShape& s, const Vector& c) {
  if (c.size() != s.one_cochain_size())
    throw Error(ErrorCode::ShapeError, "one-cochain needs " + std::to_string(s.one_cochain_size()) +
                                           " coordinates");
  OneCochain b = zero(f, s);
  std::size_t k = 0;
  for (std::size_t r = 0; r < s.v; ++r)
    for (std::size_t col = 0; col < s.m; ++col) b.b0.at(r, col) = c[k++];
  for (std::size_t r = 0; r < s.w; ++r)
    for (std::size_t col = 0; col < s.n; ++col) b.b1.at(r, col) = c[k++];
  return b;
}

Vector OneCochain::coordinates() const {
  Vector c = b0.entries();
  c.insert(c.end(), b1.entries().begin(), b1.entries().end());
  return c;
}

}  // namespace malcev
