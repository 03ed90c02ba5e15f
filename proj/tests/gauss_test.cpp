#include <optional>
#include <vector>

#include "doctest.h"
#include "gaussian/errors.hpp"
#include "gaussian/gauss.hpp"
#include "gaussian/ideals.hpp"

using namespace gaussian;

namespace {

const FieldSpec kGF = FieldSpec::parse("gf:32003");
const FieldSpec kQ = FieldSpec::parse("q");

}  // namespace

TEST_CASE("generic setup normalizes degrees and names variables") {
  GenericSetup s = GenericSetup::pair(3, 1, kGF);
  CHECK(s.degree(0) == 1);
  CHECK(s.degree(1) == 3);
  CHECK(s.ring()->variables() ==
        std::vector<std::string>{"x0", "x1", "y0", "y1", "y2", "y3"});
  CHECK(s.f().degree() == 1);
  CHECK(s.g().degree() == 3);

  GenericSetup t = GenericSetup::triple(2, 1, 1, kGF);
  CHECK(t.degree(0) == 1);
  CHECK(t.degree(1) == 1);
  CHECK(t.degree(2) == 2);
  CHECK(t.ring()->variables() ==
        std::vector<std::string>{"x0", "x1", "y0", "y1", "z0", "z1", "z2"});
  CHECK_THROWS_AS((void)t.poly(3), std::out_of_range);
}

TEST_CASE("content of generic polynomials and their products") {
  GenericSetup s = GenericSetup::pair(2, 2, kGF);
  Ideal cf = content(s.f());
  REQUIRE(cf.generators().size() == 3);
  CHECK(cf.generators()[0] == Polynomial::variable(s.ring(), 0));
  CHECK(cf.generators()[2] == Polynomial::variable(s.ring(), 2));

  GenericSetup u = GenericSetup::pair(1, 1, kGF);
  Ideal cfg = content(u.f() * u.g());
  REQUIRE(cfg.generators().size() == 3);
  CHECK(cfg.generators()[0] == parse_poly(u.ring(), "x0*y0"));
  CHECK(cfg.generators()[1] == parse_poly(u.ring(), "x0*y1 + x1*y0"));
  CHECK(cfg.generators()[2] == parse_poly(u.ring(), "x1*y1"));

  UniPoly one = UniPoly::make(u.ring(), {Polynomial::one(u.ring())});
  CHECK(ideal_equal(content(one), Ideal::unit(u.ring())));
  CHECK(content(UniPoly::zero(u.ring())).has_no_generators());
}

TEST_CASE("product content formulas hold for small generic pairs") {
  for (auto [m, n] : {std::pair{1u, 1u}, std::pair{1u, 2u}}) {
    CAPTURE(m);
    CAPTURE(n);
    GenericSetup s = GenericSetup::pair(m, n, kGF);
    ContentFormulaCheck c = check_dedekind_mertens(s);
    CHECK(c.main_identity);
    CHECK(c.decayed_identity);
    CHECK(c.ok());
  }
}

TEST_CASE("product content formula holds over the rationals") {
  GenericSetup s = GenericSetup::pair(1, 1, kQ);
  CHECK(check_dedekind_mertens(s).ok());
}

TEST_CASE("dropping one factor from the exponent breaks the identity") {
  EffortMeter meter;
  GenericSetup small = GenericSetup::pair(1, 1, kGF);
  CHECK_FALSE(dedekind_mertens_with_dropped_exponent(small, meter));
  GenericSetup wide = GenericSetup::pair(2, 2, kGF);
  CHECK_FALSE(dedekind_mertens_with_dropped_exponent(wide, meter));

  GenericSetup degenerate = GenericSetup::pair(0, 1, kGF);
  CHECK_THROWS_AS(dedekind_mertens_with_dropped_exponent(degenerate, meter), DomainError);
}

TEST_CASE("reduction predicate on the canonical pair") {
  GenericSetup s = GenericSetup::pair(1, 1, kGF);
  Ideal J = content(s.f() * s.g());
  Ideal I = ideal_product(content(s.f()), content(s.g()));

  CHECK(is_reduction(J, I, 1));
  CHECK_FALSE(is_reduction(J, I, 0));
  CHECK(is_reduction(I, I, 0));

  // x0 alone is not inside I, so it cannot pose as a reduction candidate.
  Ideal stray = Ideal::make(s.ring(), {Polynomial::variable(s.ring(), 0)});
  CHECK_THROWS_AS(is_reduction(stray, I, 1), DomainError);
}

TEST_CASE("reduction number equals the smaller degree") {
  for (auto [m, n] : {std::pair{1u, 1u}, std::pair{1u, 2u}}) {
    CAPTURE(m);
    CAPTURE(n);
    GenericSetup s = GenericSetup::pair(m, n, kGF);
    Ideal J = content(s.f() * s.g());
    Ideal I = ideal_product(content(s.f()), content(s.g()));
    auto r = reduction_number(J, I, m + 1);
    REQUIRE(r.has_value());
    CHECK(*r == m);
  }
}

TEST_CASE("reduction monotonicity on the canonical pair") {
  GenericSetup s = GenericSetup::pair(1, 2, kGF);
  Ideal J = content(s.f() * s.g());
  Ideal I = ideal_product(content(s.f()), content(s.g()));
  bool seen = false;
  for (std::uint32_t r = 0; r <= 3; ++r) {
    bool now = is_reduction(J, I, r);
    if (seen) CHECK(now);
    seen = seen || now;
  }
  CHECK(seen);
}

TEST_CASE("reduction number unreachable within the bound reports nothing") {
  GenericSetup s = GenericSetup::pair(1, 1, kGF);
  Ideal I = ideal_product(content(s.f()), content(s.g()));
  // The zero ideal sits inside I but never satisfies the identity.
  Ideal J = Ideal::zero(s.ring());
  CHECK_FALSE(reduction_number(J, I, 3).has_value());
}

TEST_CASE("linkage component and its codimension") {
  GenericSetup s = GenericSetup::pair(1, 1, kGF);
  Ideal L = L2(s);
  // c(fg) + c(f)^2 + c(g)^2: three quadric sums plus two monomial squares' worth.
  CHECK(L.generators().size() == 9);

  // The component is supported at the irrelevant ideal: codimension 4 in 4
  // variables, i.e. Krull dimension zero.
  CHECK(krull_dimension(L) == 0);
  CHECK(static_cast<int>(s.ring()->arity()) - krull_dimension(L) == 4);
}

TEST_CASE("pairwise primary decomposition for small generic pairs") {
  for (auto [m, n] : {std::pair{1u, 1u}, std::pair{1u, 2u}}) {
    CAPTURE(m);
    CAPTURE(n);
    GenericSetup s = GenericSetup::pair(m, n, kGF);
    CHECK(check_primary_decomposition2(s));
  }
}

TEST_CASE("pairwise decomposition over the rationals") {
  GenericSetup s = GenericSetup::pair(1, 1, kQ);
  CHECK(check_primary_decomposition2(s));
}

TEST_CASE("banded matrix data") {
  GenericSetup s = GenericSetup::pair(1, 1, kGF);
  HUData d = hu_data(s);
  REQUIRE(d.X.size() == 2);
  REQUIRE(d.phi.size() == 2);
  REQUIRE(d.phi[0].size() == 3);
  CHECK(d.phi[0][0] == parse_poly(s.ring(), "y0"));
  CHECK(d.phi[0][1] == parse_poly(s.ring(), "y1"));
  CHECK(d.phi[0][2].is_zero());
  CHECK(d.phi[1][0].is_zero());
  CHECK(d.phi[1][1] == parse_poly(s.ring(), "y0"));
  CHECK(d.phi[1][2] == parse_poly(s.ring(), "y1"));
}

TEST_CASE("determinants by cofactor expansion") {
  RingPtr ring = PolyRing::make({"a", "b", "c", "d"}, kGF, MonomialOrder::degrevlex());
  auto v = [&](std::size_t i) { return Polynomial::variable(ring, i); };
  Polynomial zero = Polynomial::zero(ring);
  Polynomial one = Polynomial::one(ring);

  CHECK(determinant({{v(0), v(1)}, {v(2), v(3)}}, ring) ==
        parse_poly(ring, "a*d - b*c"));
  // Odd permutation matrix.
  CHECK(determinant({{zero, one, zero}, {one, zero, zero}, {zero, zero, one}}, ring) ==
        Polynomial::constant(ring, ring->field().from_int(-1)));
  CHECK_THROWS_AS(determinant({{v(0), v(1)}}, ring), DomainError);
  CHECK_THROWS_AS(determinant({}, ring), DomainError);
}

TEST_CASE("maximal minors of the banded matrix") {
  GenericSetup s = GenericSetup::pair(1, 1, kGF);
  HUData d = hu_data(s);
  Ideal minors = maximal_minors(d.phi, s.ring());
  Ideal expected = Ideal::make(
      s.ring(), {parse_poly(s.ring(), "y0^2"), parse_poly(s.ring(), "y0*y1"),
                 parse_poly(s.ring(), "y1^2")});
  CHECK(ideal_equal(minors, expected));

  CHECK_THROWS_AS(maximal_minors({{d.X[0]}, {d.X[1]}}, s.ring()), DomainError);
}

TEST_CASE("banded specialization identities") {
  for (auto [m, n] : {std::pair{1u, 1u}, std::pair{1u, 2u}}) {
    CAPTURE(m);
    CAPTURE(n);
    GenericSetup s = GenericSetup::pair(m, n, kGF);
    HUCheck c = hu_check(s);
    CHECK(c.row_times_matrix);
    CHECK(c.row_power);
    CHECK(c.maximal_minors);
    CHECK(c.ok());
  }
}

TEST_CASE("structure algebra construction and arithmetic") {
  RingPtr base =
      PolyRing::make({"u0", "u1", "u2", "v0", "v1", "v2"}, kGF, MonomialOrder::degrevlex());
  StructureAlgebra A = StructureAlgebra::truncated_power(base, 3);
  CHECK(A.rank() == 3);
  CHECK(A.labels() == std::vector<std::string>{"1", "t", "t^2"});
  CHECK(A.is_associative());

  auto var = [&](std::size_t i) { return Polynomial::variable(base, i); };
  Polynomial zero = Polynomial::zero(base);
  // (u0 + u1 t)(v0 + v1 t) = u0v0 + (u0v1 + u1v0) t + u1v1 t^2.
  auto w = A.multiply({var(0), var(1), zero}, {var(3), var(4), zero});
  CHECK(w[0] == parse_poly(base, "u0*v0"));
  CHECK(w[1] == parse_poly(base, "u0*v1 + u1*v0"));
  CHECK(w[2] == parse_poly(base, "u1*v1"));

  // Truncation drops the top coefficient of a full product.
  auto full = A.multiply({var(0), var(1), var(2)}, {var(3), var(4), var(5)});
  CHECK(full[2] == parse_poly(base, "u0*v2 + u1*v1 + u2*v0"));

  CHECK_THROWS_AS(A.multiply({var(0)}, {var(3), var(4), zero}), DomainError);
  CHECK_THROWS_AS(StructureAlgebra::truncated_power(base, 0), DomainError);
}

TEST_CASE("structure content agrees with plain content") {
  RingPtr base =
      PolyRing::make({"u0", "u1", "u2", "v0", "v1", "v2"}, kGF, MonomialOrder::degrevlex());
  StructureAlgebra A = StructureAlgebra::truncated_power(base, 3);
  auto var = [&](std::size_t i) { return Polynomial::variable(base, i); };

  std::vector<Polynomial> coeffs = {var(0), var(1), var(2)};
  Ideal via_algebra = struct_content(A, coeffs);
  Ideal via_unipoly = content(UniPoly::make(base, coeffs));
  CHECK(ideal_equal(via_algebra, via_unipoly));

  // A basis vector is unimodular.
  Ideal basis_content =
      struct_content(A, {Polynomial::zero(base), Polynomial::one(base), Polynomial::zero(base)});
  CHECK(ideal_equal(basis_content, Ideal::unit(base)));

  CHECK_THROWS_AS(struct_content(A, {var(0)}), DomainError);
}

TEST_CASE("cyclic group table is associative, unlike a scrambled table") {
  RingPtr base = PolyRing::make({"u0", "u1", "v0", "v1"}, kGF, MonomialOrder::degrevlex());
  CHECK(StructureAlgebra::cyclic_group(base, 2).is_associative());
  CHECK(StructureAlgebra::cyclic_group(base, 3).is_associative());

  // e0*e0 = e1 and e0*e1 = e0 with everything else zero is not associative:
  // (e0 e0) e1 = e1 e1 = 0 but e0 (e0 e1) = e0 e0 = e1.
  Polynomial z = Polynomial::zero(base);
  Polynomial one = Polynomial::one(base);
  StructureAlgebra bad = StructureAlgebra::make(
      base, {"e0", "e1"},
      {{{z, one}, {one, z}}, {{z, z}, {z, z}}});
  CHECK_FALSE(bad.is_associative());
}

TEST_CASE("structure probe recovers the polynomial reduction behaviour") {
  RingPtr base =
      PolyRing::make({"u0", "u1", "u2", "v0", "v1", "v2"}, kGF, MonomialOrder::degrevlex());
  StructureAlgebra A = StructureAlgebra::truncated_power(base, 3);
  auto var = [&](std::size_t i) { return Polynomial::variable(base, i); };
  Polynomial zero = Polynomial::zero(base);
  EffortMeter meter;

  // Degree-1 elements never hit the truncation, so the product behaves like a
  // genuine polynomial product and the reduction number is the smaller degree.
  StructureProbe clean = probe_structure_elements(
      A, {var(0), var(1), zero}, {var(3), var(4), zero}, meter);
  CHECK(clean.containment);
  REQUIRE(clean.reduction.has_value());
  CHECK(*clean.reduction == 1);

  // Fully generic elements lose their top coefficient to the truncation and
  // the reduction property genuinely fails (specializing to the top basis
  // vector kills every product coefficient).
  StructureProbe truncated = probe_structure_algebra(A, meter);
  CHECK(truncated.containment);
  CHECK_FALSE(truncated.reduction.has_value());
}

TEST_CASE("cyclic probe keeps containment but has no reduction") {
  RingPtr base = PolyRing::make({"u0", "u1", "v0", "v1"}, kGF, MonomialOrder::degrevlex());
  StructureAlgebra A = StructureAlgebra::cyclic_group(base, 2);
  EffortMeter meter;
  StructureProbe probe = probe_structure_algebra(A, meter);
  CHECK(probe.containment);
  CHECK_FALSE(probe.reduction.has_value());

  RingPtr tiny = PolyRing::make({"u0", "u1", "v0"}, kGF, MonomialOrder::degrevlex());
  StructureAlgebra B = StructureAlgebra::cyclic_group(tiny, 2);
  EffortMeter other;
  CHECK_THROWS_AS(probe_structure_algebra(B, other), DomainError);
}

TEST_CASE("setups of the wrong arity are rejected") {
  GenericSetup pair = GenericSetup::pair(1, 1, kGF);
  GenericSetup triple = GenericSetup::triple(1, 1, 1, kGF);
  EffortMeter meter;
  CHECK_THROWS_AS(check_dedekind_mertens(triple, meter), DomainError);
  CHECK_THROWS_AS((void)L2(triple), DomainError);
  CHECK_THROWS_AS((void)L3(pair), DomainError);
  CHECK_THROWS_AS(check_primary_decomposition3(pair, meter), DomainError);
  CHECK_THROWS_AS((void)hu_data(triple), DomainError);
}

TEST_CASE("seven-summand component for the smallest triple") {
  GenericSetup s = GenericSetup::triple(1, 1, 1, kGF);
  Ideal L = L3(s);
  // c(fgh): 4 cubes' worth of coefficients; three pairwise contents squared
  // (3 gens each -> 6, 6, 6); three single contents cubed (4 each).
  CHECK(L.generators().size() == 4 + 6 + 6 + 6 + 4 + 4 + 4);
  for (const Polynomial& gen : L.generators()) CHECK(gen.is_homogeneous());
}
