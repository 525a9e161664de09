#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace malcev {

class Scalar;

/// Field descriptor: either the rationals or a prime field F_p.
class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws UnsupportedField unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_prime() const noexcept { return modulus_ != 0; }
  /// 0 for Q.
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

/// An element of a prime field, tagged with its modulus.
struct Residue {
  std::uint32_t value;
  std::uint32_t modulus;
};

/// Exact scalar: a reduced rational or an F_p residue. Arithmetic between
/// scalars of different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q);
  explicit Scalar(Residue r);

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long value);
  /// numerator / denominator in f; denominator must be nonzero (and invertible mod p).
  static Scalar from_fraction(const Field& f, const mpz_class& num, const mpz_class& den);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "-1/2", "3"; residues print as their canonical representative.
  std::string to_string() const;

  /// this += a * b, without temporaries on the rational path.
  void add_product(const Scalar& a, const Scalar& b);

 private:
  std::variant<mpq_class, Residue> value_;
};

}  // namespace malcev
