#include "gaussian/field.hpp"

#include <cctype>

namespace gaussian {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw DomainError("field modulus " + std::to_string(p) + " is not prime");
  return {FieldKind::prime_field, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad field spec '" + text + "'");
    unsigned long long p = std::stoull(digits);
    if (p > 0x7fffffffULL) throw ParseError("field modulus too large: " + digits);
    return prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("bad field spec '" + text + "' (expected 'q' or 'gf:<p>')");
}

std::string FieldSpec::name() const {
  return kind == FieldKind::rationals ? "q" : "gf:" + std::to_string(modulus);
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::prime_field && !is_prime_u32(spec_.modulus))
    throw DomainError("field modulus is not prime");
}

void Field::check(const Scalar& a) const {
  const bool want_residue = spec_.kind == FieldKind::prime_field;
  if (a.is_residue() != want_residue) throw RingMismatchError("scalar belongs to a different field");
}

Scalar Field::zero() const {
  return spec_.kind == FieldKind::prime_field ? Scalar(std::int64_t{0}) : Scalar(mpq_class(0));
}

Scalar Field::one() const {
  return spec_.kind == FieldKind::prime_field ? Scalar(std::int64_t{1}) : Scalar(mpq_class(1));
}

Scalar Field::from_int(std::int64_t n) const {
  if (spec_.kind == FieldKind::prime_field) {
    const std::int64_t p = spec_.modulus;
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Scalar(r);
  }
  return Scalar(mpq_class(static_cast<long>(n)));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DivisionByZeroError("zero denominator");
  if (spec_.kind == FieldKind::rationals) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  const std::int64_t p = spec_.modulus;
  mpz_class nm = num % p, dm = den % p;
  std::int64_t n = nm.get_si();
  std::int64_t d = dm.get_si();
  if (n < 0) n += p;
  if (d < 0) d += p;
  return div(Scalar(n), Scalar(d));
}

Scalar Field::from_decimal_string(const std::string& digits) const {
  const std::size_t dot = digits.find('.');
  if (dot == std::string::npos) return from_fraction(mpz_class(digits), 1);
  std::string whole = digits.substr(0, dot);
  std::string frac = digits.substr(dot + 1);
  if (frac.find('.') != std::string::npos || (whole.empty() && frac.empty()))
    throw ParseError("bad decimal literal '" + digits + "'");
  for (char c : whole)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal literal");
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal literal");
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  mpz_class num(whole.empty() ? "0" : whole);
  num = num * den + mpz_class(frac.empty() ? "0" : frac);
  return from_fraction(num, den);
}

bool Field::is_zero(const Scalar& a) const {
  check(a);
  return a.is_residue() ? a.residue() == 0 : a.rational() == 0;
}

bool Field::is_one(const Scalar& a) const {
  check(a);
  return a.is_residue() ? a.residue() == 1 : a.rational() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (a.is_residue()) {
    std::int64_t r = a.residue() + b.residue();
    const std::int64_t p = spec_.modulus;
    if (r >= p) r -= p;
    return Scalar(r);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (a.is_residue()) {
    std::int64_t r = a.residue() - b.residue();
    if (r < 0) r += spec_.modulus;
    return Scalar(r);
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (a.is_residue()) {
    // modulus < 2^31 so the product fits in int64
    return Scalar((a.residue() * b.residue()) % spec_.modulus);
  }
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  check(a);
  if (a.is_residue()) {
    return a.residue() == 0 ? a : Scalar(spec_.modulus - a.residue());
  }
  return Scalar(mpq_class(-a.rational()));
}

namespace {
// Modular inverse by extended Euclid; a in [1, p).
std::int64_t egcd_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  // gcd(a, p) = 1 since p is prime and a not 0 mod p
  if (t0 < 0) t0 += p;
  return t0;
}
}  // namespace

Scalar Field::inv(const Scalar& a) const {
  check(a);
  if (is_zero(a)) throw DivisionByZeroError("inverse of zero");
  if (a.is_residue()) return Scalar(egcd_inverse(a.residue(), spec_.modulus));
  return Scalar(mpq_class(1 / a.rational()));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (is_zero(b)) throw DivisionByZeroError("division by zero");
  return mul(a, inv(b));
}

std::string Field::to_string(const Scalar& a) const {
  check(a);
  if (a.is_residue()) return std::to_string(a.residue());
  return a.rational().get_str();
}

}  // namespace gaussian
