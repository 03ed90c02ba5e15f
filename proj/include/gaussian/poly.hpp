#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gaussian/field.hpp"

namespace gaussian {

struct MonomialOrder {
  enum class Kind { lex, degrevlex, block_elim };
  Kind kind = Kind::degrevlex;
  // block_elim(k): the first k variables are eliminated. Degrevlex is used
  // inside each of the two blocks, the first block dominating.
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder block_elim(std::size_t k) { return {Kind::block_elim, k}; }

  bool operator==(const MonomialOrder&) const = default;
};

// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial one(std::size_t arity);
  static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1);

  std::size_t arity() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime_with(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  // Requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> e_;
  std::uint64_t deg_ = 0;
};

// -1, 0, +1 with a > b mapped to +1. Total, multiplicative; 1 is minimal for
// the graded kinds and for lex.
int order_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> variables, FieldSpec field,
                      MonomialOrder order = MonomialOrder::degrevlex());

  std::size_t arity() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_[i]; }
  // -1 if the name is not a ring variable.
  int variable_index(const std::string& name) const;
  const FieldSpec& field_spec() const { return field_.spec(); }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  bool same_as(const PolyRing& other) const;
  // Same variables and field, any order.
  bool same_variables(const PolyRing& other) const;

 private:
  PolyRing(std::vector<std::string> variables, FieldSpec field, MonomialOrder order);

  std::vector<std::string> variables_;
  Field field_;
  MonomialOrder order_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Scalar coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

// Canonical sorted-term polynomial: terms strictly decreasing in the ring
// order, no zero coefficients, no duplicate monomials. Two equal polynomials
// are structurally identical.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Scalar c);
  static Polynomial one(RingPtr ring);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Scalar c, Monomial m);
  // Normalizing constructor: sorts, merges duplicates, drops zeros.
  static Polynomial make(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }
  // Max total degree over terms; 0 for the zero polynomial.
  std::uint64_t degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  // Everything after the leading term.
  Polynomial tail() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Scalar& c, const Monomial& m) const;
  Polynomial monic() const;

  // Same variables and field, new order: re-sorts the terms.
  Polynomial rebase(RingPtr other) const;
  // Into a larger ring; var_map[i] is the index of our variable i there.
  Polynomial embed(RingPtr big, const std::vector<std::size_t>& var_map) const;
  // Into a smaller ring; var_map[j] is the index in our ring of the small
  // ring's variable j. Every exponent outside the image must be zero.
  Polynomial contract(RingPtr small, const std::vector<std::size_t>& var_map) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  friend Polynomial subtract_scaled(const Polynomial&, const Scalar&, const Monomial&,
                                    const Polynomial&);

  RingPtr ring_;
  std::vector<Term> terms_;
};

// p - c * x^m * g in one merge pass.
Polynomial subtract_scaled(const Polynomial& p, const Scalar& c, const Monomial& m,
                           const Polynomial& g);

std::string format_monomial(const PolyRing& ring, const Monomial& m);
std::string format_poly(const Polynomial& p);
// Text format: `3*x0^2*y1 - 1/2*y0`. Coefficient first, `^` powers, `*`
// separators; unit coefficients may be omitted.
Polynomial parse_poly(const RingPtr& ring, const std::string& text);

// Polynomial in an auxiliary variable t with Polynomial coefficients;
// coeffs[i] is the coefficient of t^i. Leading coefficient nonzero unless the
// zero polynomial (empty list).
class UniPoly {
 public:
  UniPoly() = default;

  static UniPoly make(RingPtr ring, std::vector<Polynomial> coeffs);
  static UniPoly zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& coeff(std::size_t i) const { return coeffs_[i]; }

  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator+(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> coeffs_;
};

}  // namespace gaussian
