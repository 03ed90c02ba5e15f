#include "gaussian/ideals.hpp"

#include <random>

#include "doctest.h"

using namespace gaussian;

namespace {

RingPtr ring_q(std::vector<std::string> vars) {
  return PolyRing::make(std::move(vars), FieldSpec::rationals());
}

Ideal parse_ideal(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse_poly(R, s));
  return Ideal::make(R, std::move(ps));
}

// Independent oracle: the intersection of two monomial ideals is generated by
// the pairwise lcms of their generators.
Ideal lcm_intersection_oracle(const RingPtr& R, const std::vector<Monomial>& A,
                              const std::vector<Monomial>& B) {
  std::vector<Polynomial> gens;
  for (const auto& a : A)
    for (const auto& b : B)
      gens.push_back(Polynomial::term(R, R->field().one(), Monomial::lcm(a, b)));
  return Ideal::make(R, std::move(gens));
}

// Independent oracle: the dimension is the size of the largest variable set
// containing no generator's full support. Try every subset, largest first.
int exhaustive_dimension(const RingPtr& R, const std::vector<Monomial>& lt_gens) {
  const std::size_t n = R->arity();
  for (int size = static_cast<int>(n); size >= 0; --size) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (__builtin_popcountll(mask) != size) continue;
      bool independent = true;
      for (const auto& g : lt_gens) {
        bool support_inside = true;
        for (std::size_t i = 0; i < n; ++i)
          if (g[i] != 0 && (mask >> i & 1) == 0) {
            support_inside = false;
            break;
          }
        if (support_inside) {
          independent = false;
          break;
        }
      }
      if (independent) return size;
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("sums, products, powers materialize the expected generators") {
  RingPtr R = ring_q({"x0", "x1", "y0", "y1"});
  Ideal A = parse_ideal(R, {"x0"});
  Ideal B = parse_ideal(R, {"y0", "y1"});
  Ideal P = ideal_product(A, B);
  REQUIRE(P.generators().size() == 2);
  CHECK(ideal_equal(P, parse_ideal(R, {"x0*y0", "x0*y1"})));

  Ideal X = parse_ideal(R, {"x0", "x1"});
  Ideal X2 = ideal_power(X, 2);
  REQUIRE(X2.generators().size() == 3);  // x0^2, x0x1, x1^2
  CHECK(ideal_equal(X2, parse_ideal(R, {"x0^2", "x0*x1", "x1^2"})));

  Ideal Y = parse_ideal(R, {"y0", "y1"});
  Ideal XY = ideal_product(X, Y);
  REQUIRE(XY.generators().size() == 4);
  CHECK(ideal_equal(XY, parse_ideal(R, {"x0*y0", "x0*y1", "x1*y0", "x1*y1"})));

  CHECK(ideal_equal(ideal_power(X, 0), Ideal::unit(R)));
  CHECK(ideal_equal(ideal_power(X, 1), X));
  CHECK(ideal_equal(ideal_sum(A, B), parse_ideal(R, {"x0", "y0", "y1"})));
}

TEST_CASE("power is multiplicative: I^a · I^b = I^(a+b)") {
  RingPtr R = ring_q({"x", "y", "z"});
  Ideal I = parse_ideal(R, {"x*y - z^2", "y^2", "x + z"});
  for (std::uint32_t a = 0; a <= 2; ++a)
    for (std::uint32_t b = 1; a + b <= 3; ++b)
      CHECK(ideal_equal(ideal_product(ideal_power(I, a), ideal_power(I, b)),
                        ideal_power(I, a + b)));
}

TEST_CASE("intersections via the auxiliary variable") {
  RingPtr R = ring_q({"x0", "y0"});
  CHECK(ideal_equal(ideal_intersect(parse_ideal(R, {"x0"}), parse_ideal(R, {"y0"})),
                    parse_ideal(R, {"x0*y0"})));
  CHECK(ideal_equal(ideal_intersect(parse_ideal(R, {"x0", "y0"}), parse_ideal(R, {"x0"})),
                    parse_ideal(R, {"x0"})));
}

TEST_CASE("absorption: c(fg) + c(f) ∩ c(g)^2 = c(fg) at degrees (1,1)") {
  RingPtr R = ring_q({"x0", "x1", "y0", "y1"});
  Ideal cfg = parse_ideal(R, {"x0*y0", "x0*y1 + x1*y0", "x1*y1"});
  Ideal cf = parse_ideal(R, {"x0", "x1"});
  Ideal cg2 = ideal_power(parse_ideal(R, {"y0", "y1"}), 2);
  Ideal mixed = ideal_intersect(cf, cg2);
  CHECK(ideal_equal(ideal_sum(cfg, mixed), cfg));
}

TEST_CASE("aux-variable name avoids collisions with ring variables") {
  RingPtr R = ring_q({"u", "v"});
  Ideal I = parse_ideal(R, {"u"});
  Ideal J = parse_ideal(R, {"v"});
  Ideal M = ideal_intersect(I, J);
  CHECK(ideal_equal(M, parse_ideal(R, {"u*v"})));
  CHECK(M.ring()->variables() == std::vector<std::string>{"u", "v"});
}

TEST_CASE("monomial intersections agree with the lcm oracle") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<std::uint32_t> expo(0, 2);
  std::uniform_int_distribution<int> ngens(1, 3);
  RingPtr R = PolyRing::make({"x", "y", "z"}, FieldSpec::prime(32003));
  for (int iter = 0; iter < 25; ++iter) {
    std::vector<Monomial> A, B;
    for (int k = ngens(rng); k > 0; --k) {
      Monomial m({expo(rng), expo(rng), expo(rng)});
      if (!m.is_one()) A.push_back(m);
    }
    for (int k = ngens(rng); k > 0; --k) {
      Monomial m({expo(rng), expo(rng), expo(rng)});
      if (!m.is_one()) B.push_back(m);
    }
    if (A.empty() || B.empty()) continue;
    std::vector<Polynomial> ga, gb;
    for (const auto& m : A) ga.push_back(Polynomial::term(R, R->field().one(), m));
    for (const auto& m : B) gb.push_back(Polynomial::term(R, R->field().one(), m));
    Ideal result = ideal_intersect(Ideal::make(R, ga), Ideal::make(R, gb));
    CHECK(ideal_equal(result, lcm_intersection_oracle(R, A, B)));
  }
}

TEST_CASE("product is contained in intersection") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<std::uint32_t> expo(0, 2);
  RingPtr R = PolyRing::make({"x", "y", "z"}, FieldSpec::prime(32003));
  const Field& F = R->field();
  std::uniform_int_distribution<int> coef(1, 5);
  for (int iter = 0; iter < 10; ++iter) {
    // two-term generators
    auto rnd_poly = [&] {
      std::vector<Term> ts;
      for (int k = 0; k < 2; ++k)
        ts.push_back({F.from_int(coef(rng)), Monomial({expo(rng), expo(rng), expo(rng)})});
      return Polynomial::make(R, ts);
    };
    Ideal I = Ideal::make(R, {rnd_poly(), rnd_poly()});
    Ideal J = Ideal::make(R, {rnd_poly()});
    if (I.has_no_generators() || J.has_no_generators()) continue;
    Ideal prod = ideal_product(I, J);
    Ideal meet = ideal_intersect(I, J);
    GroebnerBasis G = buchberger(meet);
    for (const auto& p : prod.generators()) CHECK(normal_form(p, G).is_zero());
  }
}

TEST_CASE("kernels of maps to monomials and to sums") {
  RingPtr R = ring_q({"x0", "x1", "y0", "y1"});
  SUBCASE("four products give the determinantal relation") {
    std::vector<Polynomial> targets = {parse_poly(R, "x0*y0"), parse_poly(R, "x0*y1"),
                                       parse_poly(R, "x1*y0"), parse_poly(R, "x1*y1")};
    Ideal K = kernel_of_map(targets, {"Q00", "Q01", "Q10", "Q11"});
    REQUIRE(K.generators().size() == 1);
    CHECK(ideal_equal(K, parse_ideal(K.ring(), {"Q00*Q11 - Q01*Q10"})));
  }
  SUBCASE("diagonal coefficient sums are algebraically independent") {
    std::vector<Polynomial> targets = {parse_poly(R, "x0*y0"), parse_poly(R, "x0*y1 + x1*y0"),
                                       parse_poly(R, "x1*y1")};
    Ideal K = kernel_of_map(targets, {"H0", "H1", "H2"});
    CHECK(K.has_no_generators());
  }
  SUBCASE("one relation between x0^2 and x0") {
    RingPtr S = ring_q({"x0"});
    std::vector<Polynomial> targets = {parse_poly(S, "x0^2"), parse_poly(S, "x0")};
    Ideal K = kernel_of_map(targets, {"S1", "S2"});
    REQUIRE(K.generators().size() == 1);
    CHECK(ideal_equal(K, parse_ideal(K.ring(), {"S1 - S2^2"})));
  }
  SUBCASE("input validation") {
    std::vector<Polynomial> targets = {parse_poly(R, "x0*y0")};
    CHECK_THROWS_AS(kernel_of_map(targets, {"x0"}), DomainError);
    CHECK_THROWS_AS(kernel_of_map(targets, {"A", "B"}), DomainError);
    CHECK_THROWS_AS(kernel_of_map({Polynomial::zero(R)}, {"A"}), DomainError);
  }
}

TEST_CASE("Krull dimension of structured quotients") {
  RingPtr R = ring_q({"Q00", "Q01", "Q10", "Q11"});
  CHECK(krull_dimension(parse_ideal(R, {"Q00*Q11 - Q01*Q10"})) == 3);
  CHECK(krull_dimension(Ideal::zero(R)) == 4);
  RingPtr S = ring_q({"x0", "x1", "y0", "y1"});
  // coefficient ideal of the product plus both squared coefficient ideals
  Ideal L2 = parse_ideal(S, {"x0*y0", "x0*y1 + x1*y0", "x1*y1", "x0^2", "x0*x1", "x1^2",
                             "y0^2", "y0*y1", "y1^2"});
  CHECK(krull_dimension(L2) == 0);
  CHECK_THROWS_AS(krull_dimension(Ideal::unit(R)), DomainError);
}

TEST_CASE("dimension agrees with exhaustive subset search on monomial ideals") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::uint32_t> expo(0, 2);
  std::uniform_int_distribution<int> ngens(1, 5);
  for (std::size_t arity : {3u, 5u, 8u}) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < arity; ++i) vars.push_back("v" + std::to_string(i));
    RingPtr R = PolyRing::make(vars, FieldSpec::prime(32003));
    for (int iter = 0; iter < 10; ++iter) {
      std::vector<Monomial> ms;
      std::vector<Polynomial> gens;
      for (int k = ngens(rng); k > 0; --k) {
        std::vector<std::uint32_t> e(arity, 0);
        for (auto& x : e) x = expo(rng) == 2 ? 1 : 0;
        Monomial m(std::move(e));
        if (m.is_one()) continue;
        ms.push_back(m);
        gens.push_back(Polynomial::term(R, R->field().one(), m));
      }
      if (gens.empty()) continue;
      Ideal I = Ideal::make(R, gens);
      CHECK(krull_dimension(I) == exhaustive_dimension(R, ms));
    }
  }
}

TEST_CASE("Hilbert functions by standard-monomial count") {
  SUBCASE("one-variable square zero") {
    RingPtr R = ring_q({"x"});
    auto hf = hilbert_function(parse_ideal(R, {"x^2"}), 4);
    CHECK(hf == std::vector<std::uint64_t>{1, 1, 0, 0, 0});
  }
  SUBCASE("determinantal quadric with three linear forms is a dual number ring") {
    RingPtr R = ring_q({"Q00", "Q01", "Q10", "Q11"});
    Ideal I = parse_ideal(R, {"Q00*Q11 - Q01*Q10", "Q00", "Q01 + Q10", "Q11"});
    auto hf = hilbert_function(I, 2);
    CHECK(hf == std::vector<std::uint64_t>{1, 1, 0});
  }
  SUBCASE("polynomial ring itself counts all monomials") {
    RingPtr R = ring_q({"x", "y"});
    auto hf = hilbert_function(Ideal::zero(R), 3);
    CHECK(hf == std::vector<std::uint64_t>{1, 2, 3, 4});
  }
  SUBCASE("non-homogeneous input is rejected") {
    RingPtr R = ring_q({"x", "y"});
    CHECK_THROWS_AS(hilbert_function(parse_ideal(R, {"x^2 - y"}), 3), DomainError);
  }
  SUBCASE("Artinian totals equal the standard monomial count") {
    RingPtr R = ring_q({"x", "y"});
    Ideal I = parse_ideal(R, {"x^2", "x*y", "y^3"});
    auto hf = hilbert_function(I, 6);
    CHECK(hf == std::vector<std::uint64_t>{1, 2, 1, 0, 0, 0, 0});
    // standard monomials: 1, x, y, y^2 — four in all
    std::uint64_t total = 0;
    for (auto c : hf) total += c;
    CHECK(total == 4);
  }
}
