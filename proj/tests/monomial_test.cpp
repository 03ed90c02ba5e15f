#include "gaussian/monomial.hpp"

#include <random>

#include "doctest.h"
#include "gaussian/ideals.hpp"

using namespace gaussian;

namespace {

const FieldSpec kGF = FieldSpec::prime(32003);

RingPtr ring2() { return PolyRing::make({"x", "y"}, kGF); }

MonomialIdeal mono_ideal(const RingPtr& R, std::vector<std::vector<std::uint32_t>> exps) {
  std::vector<Monomial> ms;
  for (auto& e : exps) ms.push_back(Monomial(std::move(e)));
  return MonomialIdeal::make(R, std::move(ms));
}

bool is_antichain(const MonomialIdeal& I) {
  const auto& g = I.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i].divides(g[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("graph construction and parsing") {
  Graph c4 = Graph::cycle(4);
  CHECK(c4.edges.size() == 4);
  Graph p3 = Graph::path(3);
  CHECK(p3.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(Graph::complete(4).edges.size() == 6);

  Graph j = Graph::parse_json(R"({"vertices": 3, "edges": [[0,1],[2,1],[0,1]]})");
  CHECK(j.vertices == 3);
  CHECK(j.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});

  Graph e = Graph::parse_edge_list("4\n0 1\n1 2\n2 3\n");
  CHECK(e.edges.size() == 3);

  CHECK_THROWS_AS(Graph::make(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph::make(2, {{0, 5}}), DomainError);
  CHECK_THROWS_AS(Graph::parse_json("{}"), ParseError);
  CHECK_THROWS_AS(Graph::parse_json("not json"), ParseError);
  CHECK_THROWS_AS(Graph::parse_edge_list("3\n0"), ParseError);
}

TEST_CASE("edge ideals of small graphs") {
  MonomialIdeal path = edge_ideal(Graph::path(3), kGF);
  REQUIRE(path.generators().size() == 2);
  CHECK(path.ring()->variables() == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK(path.generators()[0].degree() == 2);
  CHECK(is_antichain(path));
  MonomialIdeal c4 = edge_ideal(Graph::cycle(4), kGF);
  CHECK(c4.generators().size() == 4);
}

TEST_CASE("minimal generators form an antichain") {
  RingPtr R = ring2();
  MonomialIdeal I = mono_ideal(R, {{1, 0}, {2, 0}, {1, 1}, {1, 0}});
  REQUIRE(I.generators().size() == 1);
  CHECK(I.generators()[0] == Monomial({1, 0}));
  CHECK(I.contains(Monomial({3, 2})));
  CHECK_FALSE(I.contains(Monomial({0, 5})));
}

TEST_CASE("product ideal generators") {
  MonomialIdeal I = product_ideal(1, 1, 1, kGF);
  CHECK(I.ring()->arity() == 6);
  CHECK(I.generators().size() == 8);
  for (const auto& g : I.generators()) CHECK(g.degree() == 3);
  MonomialIdeal J = product_ideal(1, 1, 2, kGF);
  CHECK(J.generators().size() == 12);
  CHECK(J.ring()->variables().back() == "z2");
}

TEST_CASE("monomial powers") {
  RingPtr R = ring2();
  MonomialIdeal I = mono_ideal(R, {{2, 0}, {0, 2}});
  MonomialIdeal I2 = monomial_power(I, 2);
  CHECK(I2 == mono_ideal(R, {{4, 0}, {2, 2}, {0, 4}}));
  CHECK(monomial_power(I, 1) == I);
  CHECK_THROWS_AS(monomial_power(I, 0), DomainError);

  MonomialIdeal P = product_ideal(1, 1, 1, kGF);
  MonomialIdeal P2 = monomial_power(P, 2);
  CHECK(P2.generators().size() == 27);
  for (const auto& g : P2.generators()) CHECK(g.degree() == 6);
  CHECK(is_antichain(P2));
}

TEST_CASE("join of two edge ideals") {
  MonomialIdeal A = edge_ideal(Graph::path(2), kGF, "x");   // (x0 x1)
  MonomialIdeal B = edge_ideal(Graph::path(2), kGF, "y");   // (y0 y1)
  MonomialIdeal J = join(A, B);
  CHECK(J.ring()->arity() == 4);
  // x0x1, y0y1, and the four cross products
  CHECK(J.generators().size() == 6);
  CHECK(is_antichain(J));
  CHECK_THROWS_AS(join(A, A), DomainError);
}

TEST_CASE("membership in the scaled Newton polyhedron") {
  RingPtr R = ring2();
  MonomialIdeal I = mono_ideal(R, {{2, 0}, {0, 2}});
  NewtonPolyhedron P = NewtonPolyhedron::of(I);
  CHECK(np_member(Monomial({1, 1}), 1, P));        // (1/2, 1/2) certificate
  CHECK_FALSE(np_member(Monomial({1, 0}), 1, P));  // total weight must reach 2
  for (const auto& g : I.generators()) CHECK(np_member(g, 1, P));
  CHECK(np_member(Monomial({2, 2}), 2, P));
  CHECK_FALSE(np_member(Monomial({3, 0}), 2, P));
  CHECK(np_member(Monomial({4, 0}), 2, P));
  CHECK_THROWS_AS(np_member(Monomial({1, 1}), 0, P), DomainError);
  CHECK_THROWS_AS(NewtonPolyhedron::of(MonomialIdeal::make(R, {})), DomainError);
}

TEST_CASE("integral closure of the first power") {
  RingPtr R = ring2();
  EffortMeter meter;
  MonomialIdeal I = mono_ideal(R, {{2, 0}, {0, 2}});
  MonomialIdeal IC = integral_closure_power(I, 1, meter);
  CHECK(IC == mono_ideal(R, {{2, 0}, {1, 1}, {0, 2}}));
  // a single generator is integrally closed
  MonomialIdeal edge = edge_ideal(Graph::path(2), kGF);
  EffortMeter m2;
  CHECK(integral_closure_power(edge, 1, m2) == edge);
}

TEST_CASE("powers sit inside their closures") {
  RingPtr R = ring2();
  MonomialIdeal I = mono_ideal(R, {{3, 0}, {1, 1}, {0, 2}});
  for (std::uint32_t q = 1; q <= 3; ++q) {
    EffortMeter meter;
    MonomialIdeal power = monomial_power(I, q);
    MonomialIdeal closure = integral_closure_power(I, q, meter);
    for (const auto& g : power.generators()) CHECK(closure.contains(g));
  }
}

TEST_CASE("closure is idempotent on the tested family") {
  RingPtr R = ring2();
  MonomialIdeal I = mono_ideal(R, {{2, 0}, {0, 3}});
  EffortMeter meter;
  MonomialIdeal c1 = integral_closure_power(I, 1, meter);
  EffortMeter m2;
  CHECK(integral_closure_power(c1, 1, m2) == c1);
}

TEST_CASE("serial and parallel closure enumerations agree") {
  std::mt19937 rng(808);
  std::uniform_int_distribution<std::uint32_t> expo(0, 3);
  std::uniform_int_distribution<int> ngens(1, 4);
  for (int iter = 0; iter < 12; ++iter) {
    std::size_t arity = 2 + iter % 3;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < arity; ++i) vars.push_back("v" + std::to_string(i));
    RingPtr R = PolyRing::make(vars, kGF);
    std::vector<Monomial> gens;
    for (int k = ngens(rng); k > 0; --k) {
      std::vector<std::uint32_t> e(arity);
      for (auto& x : e) x = expo(rng);
      Monomial m(std::move(e));
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    MonomialIdeal I = MonomialIdeal::make(R, gens);
    for (std::uint32_t q = 1; q <= 2; ++q) {
      EffortMeter ma, mb;
      CHECK(integral_closure_power(I, q, ma) == integral_closure_power_serial(I, q, mb));
    }
  }
}

TEST_CASE("enumeration budget stops oversized boxes") {
  RingPtr R = PolyRing::make({"a", "b", "c", "d", "e", "f"}, kGF);
  MonomialIdeal I = mono_ideal(R, {{9, 0, 0, 0, 0, 0}, {0, 9, 0, 0, 0, 0},
                                   {0, 0, 9, 0, 0, 0}, {0, 0, 0, 9, 0, 0},
                                   {0, 0, 0, 0, 9, 0}, {0, 0, 0, 0, 0, 9}});
  GBOptions opts;
  opts.max_steps = 1000;
  EffortMeter meter(opts);
  CHECK_THROWS_AS(integral_closure_power(I, 3, meter), BudgetExceededError);
}

TEST_CASE("normality verdicts with witnesses") {
  RingPtr R = ring2();
  EffortMeter meter;
  NormalityVerdict bad = is_normal_up_to(mono_ideal(R, {{2, 0}, {0, 2}}), 1, meter);
  CHECK_FALSE(bad.normal);
  CHECK(bad.failing_power == 1);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == Monomial({1, 1}));

  EffortMeter m2;
  NormalityVerdict good = is_normal_up_to(product_ideal(1, 1, 1, kGF), 2, m2);
  CHECK(good.normal);
}

TEST_CASE("bounded power test is sound for the LP") {
  RingPtr R = ring2();
  MonomialIdeal I = mono_ideal(R, {{2, 0}, {0, 2}});
  CHECK(brute_force_ic_member(Monomial({1, 1}), 1, I, 2) == ICProbe::member);
  CHECK(brute_force_ic_member(Monomial({1, 0}), 1, I, 10) == ICProbe::unknown);
  for (const auto& g : I.generators())
    CHECK(brute_force_ic_member(g, 1, I, 1) == ICProbe::member);
  CHECK_THROWS_AS(brute_force_ic_member(Monomial({1, 1}), 1, I, 0), DomainError);
}

TEST_CASE("whenever the power test says member, the LP agrees") {
  std::mt19937 rng(616);
  std::uniform_int_distribution<std::uint32_t> expo(0, 3);
  std::uniform_int_distribution<int> ngens(1, 4);
  std::uniform_int_distribution<std::uint32_t> qd(1, 2);
  for (int iter = 0; iter < 10; ++iter) {
    std::size_t arity = 2 + iter % 2;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < arity; ++i) vars.push_back("v" + std::to_string(i));
    RingPtr R = PolyRing::make(vars, kGF);
    std::vector<Monomial> gens;
    for (int k = ngens(rng); k > 0; --k) {
      std::vector<std::uint32_t> e(arity);
      for (auto& x : e) x = expo(rng);
      Monomial m(std::move(e));
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    MonomialIdeal I = MonomialIdeal::make(R, gens);
    NewtonPolyhedron P = NewtonPolyhedron::of(I);
    std::uint32_t q = qd(rng);
    for (int probe = 0; probe < 8; ++probe) {
      std::vector<std::uint32_t> e(arity);
      for (auto& x : e) x = expo(rng) + expo(rng);
      Monomial a(std::move(e));
      if (brute_force_ic_member(a, q, I, 4) == ICProbe::member) CHECK(np_member(a, q, P));
    }
  }
}

TEST_CASE("monomial power membership matches the basis route") {
  RingPtr R = ring2();
  MonomialIdeal I = mono_ideal(R, {{2, 0}, {1, 1}});
  MonomialIdeal I2 = monomial_power(I, 2);
  GroebnerBasis G = buchberger(I2.to_ideal());
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::uint32_t> expo(0, 5);
  for (int probe = 0; probe < 40; ++probe) {
    Monomial m({expo(rng), expo(rng)});
    Polynomial pm = Polynomial::term(R, R->field().one(), m);
    CHECK(I2.contains(m) == normal_form(pm, G).is_zero());
  }
}
