#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace quintic {

/// Either the rationals (modulus 0) or a prime field F_p with odd p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  /// Throws DomainError unless p is an odd prime below 2^31.
  static Field prime(std::uint32_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint32_t modulus() const { return p_; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Arithmetic between different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long v);
  static Scalar from_mpz(Field f, const mpz_class& v);
  /// num/den reduced into f; throws DomainError when den vanishes in f.
  static Scalar from_fraction(Field f, const mpz_class& num, const mpz_class& den);
  static Scalar from_mpq(Field f, const mpq_class& q);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Residue in [0,p); only valid over F_p.
  std::uint32_t residue() const;

  /// Image in F_p; throws DomainError if p divides the denominator.
  Scalar reduce(Field target) const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Bit size used for pivot selection; 0 for zero.
  std::size_t bit_size() const;
  /// True when the printed form starts with '-' (symmetric residues over F_p).
  bool is_negative() const;
  /// "a" or "a/b" over Q; symmetric residue over F_p.
  std::string to_string() const;

 private:
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
  Scalar(Field f, std::uint32_t v) : field_(f), value_(v) {}
  void check(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

}  // namespace quintic
