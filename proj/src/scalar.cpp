#include "malcev/scalar.hpp"

#include <stdexcept>

#include "malcev/error.hpp"

namespace malcev {

namespace {

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

[[noreturn]] void mismatch(const Field& a, const Field& b) {
  throw Error(ErrorCode::FieldMismatch,
              "cannot combine scalars over " + a.to_string() + " and " + b.to_string());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime_number(p))
    throw Error(ErrorCode::UnsupportedField, std::to_string(p) + " is not a supported prime");
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(modulus_);
}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(Residue r) : value_(r) {}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long value) {
  if (f.is_rational()) return Scalar(mpq_class(value));
  std::int64_t p = f.modulus();
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), f.modulus()});
}

Scalar Scalar::from_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (f.is_rational()) return Scalar(mpq_class(num, den));
  std::uint32_t p = f.modulus();
  std::uint32_t d = reduce(den, p);
  if (d == 0) throw std::domain_error("denominator not invertible mod " + std::to_string(p));
  std::uint64_t v = static_cast<std::uint64_t>(reduce(num, p)) * inverse_mod(d, p) % p;
  return Scalar(Residue{static_cast<std::uint32_t>(v), p});
}

Field Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rational();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }

std::uint32_t Scalar::residue() const { return std::get<Residue>(value_).value; }

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mismatch(field(), o.field());
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto& s = std::get<Residue>(o.value_);
    if (r->modulus != s.modulus) mismatch(field(), o.field());
    std::uint64_t v = static_cast<std::uint64_t>(r->value) + s.value;
    r->value = static_cast<std::uint32_t>(v % r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mismatch(field(), o.field());
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto& s = std::get<Residue>(o.value_);
    if (r->modulus != s.modulus) mismatch(field(), o.field());
    std::uint64_t v = static_cast<std::uint64_t>(r->value) * s.value;
    r->value = static_cast<std::uint32_t>(v % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{inverse_mod(r->value, r->modulus), r->modulus});
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (value_.index() != a.value_.index() || a.value_.index() != b.value_.index())
    mismatch(a.field(), b.field());
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto& x = std::get<Residue>(a.value_);
    const auto& y = std::get<Residue>(b.value_);
    if (x.modulus != r->modulus || y.modulus != r->modulus) mismatch(a.field(), b.field());
    std::uint64_t v = (static_cast<std::uint64_t>(x.value) * y.value + r->value) % r->modulus;
    r->value = static_cast<std::uint32_t>(v);
    return;
  }
  const auto& x = std::get<mpq_class>(a.value_);
  const auto& y = std::get<mpq_class>(b.value_);
  if (sgn(x) == 0 || sgn(y) == 0) return;
  auto& acc = std::get<mpq_class>(value_);
  if (x.get_den() == 1 && y.get_den() == 1 && acc.get_den() == 1) {
    mpz_addmul(acc.get_num_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
    return;
  }
  acc += x * y;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) mismatch(a.field(), b.field());
  if (auto* r = std::get_if<Residue>(&a.value_)) {
    const auto& s = std::get<Residue>(b.value_);
    if (r->modulus != s.modulus) mismatch(a.field(), b.field());
    return r->value == s.value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace malcev
