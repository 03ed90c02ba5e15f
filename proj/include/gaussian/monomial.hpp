#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussian/groebner.hpp"
#include "gaussian/poly.hpp"

namespace gaussian {

// Simple undirected graph; loop-free, endpoints within range.
struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted, unique

  static Graph make(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);
  // {"vertices": n, "edges": [[i,j],...]}
  static Graph parse_json(const std::string& text);
  // First token: vertex count; then pairs of vertex indices.
  static Graph parse_edge_list(const std::string& text);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph complete(std::size_t n);
};

// Monomial ideal held by its minimal generators (an antichain under
// divisibility), sorted ascending in the ring order.
class MonomialIdeal {
 public:
  static MonomialIdeal make(RingPtr ring, std::vector<Monomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool has_no_generators() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;
  Ideal to_ideal() const;

  bool operator==(const MonomialIdeal& o) const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

// (x_i x_j : ij an edge) in variables prefix0..prefix(n-1).
MonomialIdeal edge_ideal(const Graph& g, FieldSpec field, const std::string& prefix = "x");

// All (m+1)(n+1)(p+1) cubics x_i y_j z_k in k[x0..xm, y0..yn, z0..zp].
MonomialIdeal product_ideal(std::uint32_t m, std::uint32_t n, std::uint32_t p, FieldSpec field);

// I + J + (X)(Y) in the concatenated ring; variable sets must be disjoint.
MonomialIdeal join(const MonomialIdeal& I, const MonomialIdeal& J);

// Minimal generators of I^q.
MonomialIdeal monomial_power(const MonomialIdeal& I, std::uint32_t q);

struct NewtonPolyhedron {
  std::size_t arity = 0;
  std::vector<std::vector<std::uint32_t>> generator_exponents;

  static NewtonPolyhedron of(const MonomialIdeal& I);
};

// a ∈ q·P + R≥0: exact rational LP feasibility.
bool np_member(const Monomial& a, std::uint32_t q, const NewtonPolyhedron& P);

// Minimal generators of the integral closure of I^q, by lattice-point
// enumeration over the per-coordinate box a_j ≤ q·max_i(gen_i[j]) up to total
// degree q·max_i deg(gen_i). The meter is charged per candidate point.
MonomialIdeal integral_closure_power(const MonomialIdeal& I, std::uint32_t q, EffortMeter& meter);
// Single-threaded reference implementation with identical output.
MonomialIdeal integral_closure_power_serial(const MonomialIdeal& I, std::uint32_t q,
                                            EffortMeter& meter);

struct NormalityVerdict {
  bool normal = true;
  std::uint32_t failing_power = 0;           // set when !normal
  std::optional<Monomial> witness;           // in the closure of I^q but not in I^q
};

// Checks integral_closure_power(I, q) == monomial_power(I, q) for q = 1..Q.
NormalityVerdict is_normal_up_to(const MonomialIdeal& I, std::uint32_t Q, EffortMeter& meter);

enum class ICProbe { member, unknown };

// Bounded power test: member iff w·a dominates a generator of I^{wq} for some
// w ≤ w_max. Sound but incomplete; np_member is the decision procedure.
ICProbe brute_force_ic_member(const Monomial& a, std::uint32_t q, const MonomialIdeal& I,
                              std::uint32_t w_max);

}  // namespace gaussian
