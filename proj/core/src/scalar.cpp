#include "quintic/scalar.hpp"

#include "quintic/error.hpp"

namespace quintic {

namespace {

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t residue_of(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("field modulus must be an odd prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const { return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

Scalar Scalar::zero(Field f) { return f.is_rational() ? Scalar(f, mpq_class(0)) : Scalar(f, 0u); }

Scalar Scalar::one(Field f) { return f.is_rational() ? Scalar(f, mpq_class(1)) : Scalar(f, 1u); }

Scalar Scalar::from_int(Field f, long v) { return from_mpz(f, mpz_class(v)); }

Scalar Scalar::from_mpz(Field f, const mpz_class& v) {
  if (f.is_rational()) return Scalar(f, mpq_class(v));
  return Scalar(f, residue_of(v, f.modulus()));
}

Scalar Scalar::from_fraction(Field f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, q);
  }
  std::uint32_t d = residue_of(den, f.modulus());
  if (d == 0) throw DomainError("denominator vanishes in " + f.name());
  std::uint64_t n = residue_of(num, f.modulus());
  return Scalar(f, static_cast<std::uint32_t>(n * mod_pow(d, f.modulus() - 2, f.modulus()) % f.modulus()));
}

Scalar Scalar::from_mpq(Field f, const mpq_class& q) { return from_fraction(f, q.get_num(), q.get_den()); }

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatch("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldMismatch("residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

Scalar Scalar::reduce(Field target) const {
  if (target == field_) return *this;
  if (!field_.is_rational()) throw FieldMismatch("can only reduce rationals, not " + field_.name());
  return from_mpq(target, std::get<mpq_class>(value_));
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("mixing " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  std::uint32_t v = std::get<std::uint32_t>(value_);
  return Scalar(field_, v == 0 ? 0u : field_.modulus() - v);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  return Scalar(field_, mod_pow(std::get<std::uint32_t>(value_), field_.modulus() - 2, field_.modulus()));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) + std::get<std::uint32_t>(o.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) * std::get<std::uint32_t>(o.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check(b);
  return a.value_ == b.value_;
}

std::size_t Scalar::bit_size() const {
  if (field_.is_rational()) {
    const mpq_class& q = std::get<mpq_class>(value_);
    if (q == 0) return 0;
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  }
  return std::get<std::uint32_t>(value_) == 0 ? 0 : 1;
}

bool Scalar::is_negative() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) < 0;
  return std::get<std::uint32_t>(value_) > field_.modulus() / 2;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  std::uint32_t v = std::get<std::uint32_t>(value_);
  if (v > field_.modulus() / 2) return "-" + std::to_string(field_.modulus() - v);
  return std::to_string(v);
}

}  // namespace quintic
