#include "gaussian/poly.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace gaussian;

namespace {

RingPtr qring(std::vector<std::string> vars,
              MonomialOrder ord = MonomialOrder::degrevlex()) {
  return PolyRing::make(std::move(vars), FieldSpec::rationals(), ord);
}

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("monomial basics") {
  Monomial a = mono({2, 0, 1});
  Monomial b = mono({1, 1, 0});
  CHECK(a.degree() == 3);
  CHECK(Monomial::lcm(a, b) == mono({2, 1, 1}));
  CHECK(a.times(b) == mono({3, 1, 1}));
  CHECK(mono({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK(a.quotient(mono({1, 0, 1})) == mono({1, 0, 0}));
  CHECK(mono({1, 0, 0}).coprime_with(mono({0, 2, 0})));
  CHECK_FALSE(a.coprime_with(b));
  CHECK(Monomial::one(3).is_one());
}

TEST_CASE("degrevlex order: degree first, then smaller last differing exponent wins") {
  MonomialOrder ord = MonomialOrder::degrevlex();
  // y^2 vs xz in (x, y, z): equal degree, last difference at z where y^2 has 0
  CHECK(order_cmp(mono({0, 2, 0}), mono({1, 0, 1}), ord) > 0);
  // x > y > z for variables
  CHECK(order_cmp(mono({1, 0, 0}), mono({0, 1, 0}), ord) > 0);
  CHECK(order_cmp(mono({0, 1, 0}), mono({0, 0, 1}), ord) > 0);
  // degree dominates
  CHECK(order_cmp(mono({0, 0, 2}), mono({1, 0, 0}), ord) > 0);
  CHECK(order_cmp(mono({1, 1, 0}), mono({1, 1, 0}), ord) == 0);
}

TEST_CASE("lex order") {
  MonomialOrder ord = MonomialOrder::lex();
  CHECK(order_cmp(mono({1, 0, 0}), mono({0, 5, 5}), ord) > 0);
  CHECK(order_cmp(mono({1, 2, 0}), mono({1, 1, 9}), ord) > 0);
  CHECK(order_cmp(mono({0, 0, 1}), mono({0, 1, 0}), ord) < 0);
}

TEST_CASE("block elimination order puts the first block in charge") {
  MonomialOrder ord = MonomialOrder::block_elim(1);
  // u-degree decides first: u > any monomial in the tail block
  CHECK(order_cmp(mono({1, 0, 0}), mono({0, 7, 7}), ord) > 0);
  // equal u-degree defers to degrevlex on the rest
  CHECK(order_cmp(mono({1, 2, 0}), mono({1, 0, 1}), ord) > 0);
  CHECK(order_cmp(mono({2, 0, 0}), mono({1, 5, 5}), ord) > 0);
}

TEST_CASE("all three orders are total, multiplicative, with 1 minimal") {
  std::mt19937 rng(20260817);
  std::uniform_int_distribution<std::uint32_t> d(0, 3);
  std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                                       MonomialOrder::block_elim(2)};
  for (int iter = 0; iter < 200; ++iter) {
    Monomial a = mono({d(rng), d(rng), d(rng), d(rng)});
    Monomial b = mono({d(rng), d(rng), d(rng), d(rng)});
    Monomial c = mono({d(rng), d(rng), d(rng), d(rng)});
    for (const auto& ord : orders) {
      CHECK(order_cmp(a, b, ord) == -order_cmp(b, a, ord));
      CHECK((order_cmp(a, b, ord) == 0) == (a == b));
      // multiplicative: a < b implies ac < bc
      if (order_cmp(a, b, ord) < 0)
        CHECK(order_cmp(a.times(c), b.times(c), ord) < 0);
      if (!a.is_one()) CHECK(order_cmp(a, Monomial::one(4), ord) > 0);
    }
  }
}

TEST_CASE("ring construction validates variables") {
  CHECK_THROWS_AS(PolyRing::make({}, FieldSpec::rationals()), DomainError);
  CHECK_THROWS_AS(PolyRing::make({"x", "x"}, FieldSpec::rationals()), DomainError);
  CHECK_THROWS_AS(PolyRing::make({"3x"}, FieldSpec::rationals()), DomainError);
  CHECK_THROWS_AS(PolyRing::make({"x", "y"}, FieldSpec::rationals(),
                                 MonomialOrder::block_elim(2)),
                  DomainError);
  RingPtr R = qring({"x0", "x1", "y0"});
  CHECK(R->variable_index("x1") == 1);
  CHECK(R->variable_index("z") == -1);
}

TEST_CASE("polynomial arithmetic over Q") {
  RingPtr R = qring({"x", "y"});
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial y = Polynomial::variable(R, 1);
  Polynomial p = (x + y) * (x - y);
  Polynomial q = x * x - y * y;
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK(p.degree() == 2);
  CHECK(p.term_count() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + Polynomial::one(R)).is_homogeneous());
  // binomial cube
  Polynomial c = (x + y) * (x + y) * (x + y);
  CHECK(format_poly(c) == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
}

TEST_CASE("canonical term form: sorted strictly descending, no zeros") {
  RingPtr R = qring({"x", "y"});
  const Field& F = R->field();
  std::vector<Term> ts = {{F.from_int(1), mono({0, 1})},
                          {F.from_int(2), mono({1, 0})},
                          {F.from_int(-1), mono({0, 1})},
                          {F.from_int(3), mono({0, 0})}};
  Polynomial p = Polynomial::make(R, ts);
  CHECK(p.term_count() == 2);  // the y terms cancel
  CHECK(format_poly(p) == "2*x + 3");
  for (std::size_t i = 1; i < p.terms().size(); ++i)
    CHECK(order_cmp(p.terms()[i - 1].mono, p.terms()[i].mono, R->order()) > 0);
}

TEST_CASE("parser handles the coefficient-first text format") {
  RingPtr R = qring({"x0", "x1", "y0", "y1"});
  Polynomial p = parse_poly(R, "3*x0^2*y1 - 1/2*y0");
  CHECK(p.term_count() == 2);
  CHECK(format_poly(p) == "3*x0^2*y1 - 1/2*y0");
  CHECK(parse_poly(R, "x0*x0") == parse_poly(R, "x0^2"));
  CHECK(parse_poly(R, "-x0 + x0").is_zero());
  CHECK(parse_poly(R, "+2*x1") == parse_poly(R, "x1 + x1"));
  CHECK(parse_poly(R, "0").is_zero());
  CHECK(parse_poly(R, "7") == Polynomial::constant(R, R->field().from_int(7)));
  CHECK(parse_poly(R, "0.5*x0") == parse_poly(R, "1/2*x0"));
  CHECK(parse_poly(R, "2*3*x0") == parse_poly(R, "6*x0"));
  CHECK_THROWS_AS(parse_poly(R, "z*x0"), ParseError);
  CHECK_THROWS_AS(parse_poly(R, "x0 + "), ParseError);
  CHECK_THROWS_AS(parse_poly(R, "x0 x1"), ParseError);
  CHECK_THROWS_AS(parse_poly(R, ""), ParseError);
  CHECK_THROWS_AS(parse_poly(R, "x0^1.5"), ParseError);
}

TEST_CASE("serialize-parse is the identity on random polynomials") {
  RingPtr R = qring({"x", "y", "z"});
  const Field& F = R->field();
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<std::uint32_t> expo(0, 3);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Term> ts;
    for (int k = 0; k < 5; ++k)
      ts.push_back({F.from_int(coef(rng)), mono({expo(rng), expo(rng), expo(rng)})});
    Polynomial p = Polynomial::make(R, ts);
    if (p.is_zero()) continue;
    CHECK(parse_poly(R, format_poly(p)) == p);
  }
}

TEST_CASE("prime-field polynomials normalize coefficients") {
  RingPtr R = PolyRing::make({"x"}, FieldSpec::prime(7));
  Polynomial p = parse_poly(R, "8*x");  // = x mod 7
  CHECK(format_poly(p) == "x");
  CHECK(parse_poly(R, "7*x").is_zero());
  CHECK(format_poly(parse_poly(R, "1/2*x")) == "4*x");  // 2*4 = 1 mod 7
}

TEST_CASE("embed and contract move polynomials across rings") {
  RingPtr small = qring({"x", "y"});
  RingPtr big = qring({"u", "x", "y"});
  Polynomial p = parse_poly(small, "x^2 - y");
  Polynomial q = p.embed(big, {1, 2});
  CHECK(format_poly(q) == "x^2 - y");
  CHECK(q.ring()->arity() == 3);
  CHECK(q.contract(small, {1, 2}) == p);
  Polynomial with_u = parse_poly(big, "u*x");
  CHECK_THROWS_AS(with_u.contract(small, {1, 2}), DomainError);
}

TEST_CASE("rebase reorders terms under the new order") {
  RingPtr R = qring({"x", "y", "z"});
  RingPtr L = qring({"x", "y", "z"}, MonomialOrder::lex());
  Polynomial p = parse_poly(R, "y^2 + x*z");
  CHECK(p.leading_monomial() == mono({0, 2, 0}));  // degrevlex: y^2 leads
  Polynomial q = p.rebase(L);
  CHECK(q.leading_monomial() == mono({1, 0, 1}));  // lex: xz leads
  CHECK(q.rebase(R) == p);
}

TEST_CASE("mixed-ring arithmetic is rejected") {
  RingPtr R1 = qring({"x", "y"});
  RingPtr R2 = qring({"x", "z"});
  CHECK_THROWS_AS(Polynomial::variable(R1, 0) + Polynomial::variable(R2, 0),
                  RingMismatchError);
}

TEST_CASE("subtract_scaled cancels the intended term") {
  RingPtr R = qring({"x", "y"});
  const Field& F = R->field();
  Polynomial p = parse_poly(R, "x^2*y + x*y - y");
  Polynomial g = parse_poly(R, "x*y + 1");
  // p - x * g  kills the leading term
  Polynomial r = subtract_scaled(p, F.one(), mono({1, 0}), g);
  CHECK(r == parse_poly(R, "x*y - x - y"));
  CHECK(r == p - g.times_monomial(F.one(), mono({1, 0})));
}

TEST_CASE("coefficient polynomials in an auxiliary parameter multiply correctly") {
  RingPtr R = qring({"x0", "x1", "y0", "y1"});
  // f = x0 + x1 t, g = y0 + y1 t
  UniPoly f = UniPoly::make(R, {parse_poly(R, "x0"), parse_poly(R, "x1")});
  UniPoly g = UniPoly::make(R, {parse_poly(R, "y0"), parse_poly(R, "y1")});
  UniPoly fg = f * g;
  REQUIRE(fg.degree() == 2);
  CHECK(fg.coeff(0) == parse_poly(R, "x0*y0"));
  CHECK(fg.coeff(1) == parse_poly(R, "x0*y1 + x1*y0"));
  CHECK(fg.coeff(2) == parse_poly(R, "x1*y1"));
  CHECK(f * g == g * f);
  // zero handling: (f + (-f)) = 0
  UniPoly mf = UniPoly::make(R, {-f.coeff(0), -f.coeff(1)});
  CHECK((f + mf).is_zero());
  CHECK((f + mf).degree() == -1);
}
