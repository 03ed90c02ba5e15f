#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "gaussian/errors.hpp"

namespace gaussian {

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::prime_field;
  std::uint32_t modulus = 32003;

  static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);
  // Accepts "q" or "gf:<p>".
  static FieldSpec parse(const std::string& text);

  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

// One exact field element: a canonical residue in [0, p) for prime fields,
// or an mpq in lowest terms (positive denominator) for the rationals.
class Scalar {
 public:
  Scalar() : v_(std::int64_t{0}) {}
  explicit Scalar(std::int64_t residue) : v_(residue) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  bool is_residue() const { return std::holds_alternative<std::int64_t>(v_); }
  std::int64_t residue() const { return std::get<std::int64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  std::variant<std::int64_t, mpq_class> v_;
};

// Arithmetic context for Scalars of one FieldSpec.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  Scalar from_decimal_string(const std::string& digits) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;

  std::string to_string(const Scalar& a) const;

 private:
  void check(const Scalar& a) const;

  FieldSpec spec_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace gaussian
