#include "gaussian/monomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "gaussian/simplex.hpp"

namespace gaussian {

Graph Graph::make(std::size_t vertices,
                  std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto& [a, b] : edges) {
    if (a == b) throw DomainError("graph has a loop at vertex " + std::to_string(a));
    if (a >= vertices || b >= vertices)
      throw DomainError("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{vertices, std::move(edges)};
}

Graph Graph::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph JSON needs 'vertices' and 'edges'");
  if (!j["vertices"].is_number_unsigned()) throw ParseError("graph 'vertices' must be a count");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw ParseError("graph edge must be a pair of vertex indices");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return make(j["vertices"].get<std::size_t>(), std::move(edges));
}

Graph Graph::parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::size_t n;
  if (!(is >> n)) throw ParseError("edge list must start with the vertex count");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t a, b;
  while (is >> a) {
    if (!(is >> b)) throw ParseError("dangling edge endpoint");
    edges.emplace_back(a, b);
  }
  return make(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
  if (n < 2) throw DomainError("path needs at least 2 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make(n, std::move(edges));
}

Graph Graph::complete(std::size_t n) {
  if (n < 2) throw DomainError("complete graph needs at least 2 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make(n, std::move(edges));
}

namespace {

// Keep only divisibility-minimal exponent vectors.
std::vector<Monomial> minimalize(std::vector<Monomial> gens, const MonomialOrder& ord) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (auto& m : gens) {
    bool dominated = false;
    for (const auto& kept : minimal)
      if (kept.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(std::move(m));
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Monomial& a, const Monomial& b) { return order_cmp(a, b, ord) < 0; });
  return minimal;
}

}  // namespace

MonomialIdeal MonomialIdeal::make(RingPtr ring, std::vector<Monomial> gens) {
  for (const auto& m : gens) {
    if (m.arity() != ring->arity())
      throw RingMismatchError("monomial arity does not match ring");
  }
  MonomialIdeal I;
  I.gens_ = minimalize(std::move(gens), ring->order());
  I.ring_ = std::move(ring);
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> ps;
  ps.reserve(gens_.size());
  for (const auto& m : gens_) ps.push_back(Polynomial::term(ring_, ring_->field().one(), m));
  return Ideal::make(ring_, std::move(ps));
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  if (!ring_->same_variables(*o.ring_)) throw RingMismatchError("comparing across rings");
  return gens_ == o.gens_;
}

MonomialIdeal edge_ideal(const Graph& g, FieldSpec field, const std::string& prefix) {
  if (g.vertices == 0) throw DomainError("edge ideal of an empty vertex set");
  std::vector<std::string> vars;
  vars.reserve(g.vertices);
  for (std::size_t i = 0; i < g.vertices; ++i) vars.push_back(prefix + std::to_string(i));
  RingPtr R = PolyRing::make(std::move(vars), field);
  std::vector<Monomial> gens;
  gens.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) {
    std::vector<std::uint32_t> e(g.vertices, 0);
    e[a] = 1;
    e[b] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::make(std::move(R), std::move(gens));
}

MonomialIdeal product_ideal(std::uint32_t m, std::uint32_t n, std::uint32_t p, FieldSpec field) {
  std::vector<std::string> vars;
  for (std::uint32_t i = 0; i <= m; ++i) vars.push_back("x" + std::to_string(i));
  for (std::uint32_t j = 0; j <= n; ++j) vars.push_back("y" + std::to_string(j));
  for (std::uint32_t k = 0; k <= p; ++k) vars.push_back("z" + std::to_string(k));
  const std::size_t arity = vars.size();
  RingPtr R = PolyRing::make(std::move(vars), field);
  std::vector<Monomial> gens;
  gens.reserve(std::size_t(m + 1) * (n + 1) * (p + 1));
  for (std::uint32_t i = 0; i <= m; ++i)
    for (std::uint32_t j = 0; j <= n; ++j)
      for (std::uint32_t k = 0; k <= p; ++k) {
        std::vector<std::uint32_t> e(arity, 0);
        e[i] = 1;
        e[m + 1 + j] += 1;
        e[m + 1 + n + 1 + k] += 1;
        gens.push_back(Monomial(std::move(e)));
      }
  return MonomialIdeal::make(std::move(R), std::move(gens));
}

MonomialIdeal join(const MonomialIdeal& I, const MonomialIdeal& J) {
  const RingPtr& A = I.ring();
  const RingPtr& B = J.ring();
  if (A->field_spec() != B->field_spec()) throw RingMismatchError("join across different fields");
  for (const auto& v : B->variables())
    if (A->variable_index(v) >= 0)
      throw DomainError("join: variable sets overlap at '" + v + "'");
  std::vector<std::string> vars = A->variables();
  vars.insert(vars.end(), B->variables().begin(), B->variables().end());
  const std::size_t na = A->arity(), nb = B->arity();
  RingPtr R = PolyRing::make(std::move(vars), A->field_spec());

  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<std::uint32_t> e(na + nb, 0);
    for (std::size_t i = 0; i < na; ++i) e[i] = g[i];
    gens.push_back(Monomial(std::move(e)));
  }
  for (const auto& g : J.generators()) {
    std::vector<std::uint32_t> e(na + nb, 0);
    for (std::size_t i = 0; i < nb; ++i) e[na + i] = g[i];
    gens.push_back(Monomial(std::move(e)));
  }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      std::vector<std::uint32_t> e(na + nb, 0);
      e[i] = 1;
      e[na + j] = 1;
      gens.push_back(Monomial(std::move(e)));
    }
  return MonomialIdeal::make(std::move(R), std::move(gens));
}

MonomialIdeal monomial_power(const MonomialIdeal& I, std::uint32_t q) {
  if (q == 0) throw DomainError("monomial_power: exponent must be positive");
  const auto& gens = I.generators();
  std::vector<Monomial> sums;
  std::function<void(std::size_t, std::uint32_t, const Monomial&)> rec =
      [&](std::size_t from, std::uint32_t left, const Monomial& acc) {
        if (left == 0) {
          sums.push_back(acc);
          return;
        }
        for (std::size_t k = from; k < gens.size(); ++k) rec(k, left - 1, acc.times(gens[k]));
      };
  if (!gens.empty()) rec(0, q, Monomial::one(I.ring()->arity()));
  return MonomialIdeal::make(I.ring(), std::move(sums));
}

NewtonPolyhedron NewtonPolyhedron::of(const MonomialIdeal& I) {
  if (I.has_no_generators())
    throw DomainError("Newton polyhedron of the zero ideal is undefined");
  NewtonPolyhedron P;
  P.arity = I.ring()->arity();
  for (const auto& g : I.generators()) P.generator_exponents.push_back(g.exponents());
  return P;
}

bool np_member(const Monomial& a, std::uint32_t q, const NewtonPolyhedron& P) {
  if (q == 0) throw DomainError("np_member: scale must be positive");
  if (a.arity() != P.arity) throw RingMismatchError("np_member: arity mismatch");
  // quick accept: a dominates q times one generator
  for (const auto& v : P.generator_exponents) {
    bool dom = true;
    for (std::size_t j = 0; j < P.arity; ++j)
      if (std::uint64_t(v[j]) * q > a[j]) {
        dom = false;
        break;
      }
    if (dom) return true;
  }
  return scaled_hull_member(P.generator_exponents, a.exponents(), mpq_class(q)).feasible;
}

namespace {

struct ClosureEnumeration {
  std::vector<std::uint32_t> box;
  std::uint64_t degree_cap = 0;
};

// Minimal closure members fit under q·(per-coordinate max) and total degree
// q·(max generator degree): any looser point could shed a unit somewhere and
// stay inside the scaled polyhedron.
ClosureEnumeration closure_bounds(const MonomialIdeal& I, std::uint32_t q) {
  const std::size_t n = I.ring()->arity();
  ClosureEnumeration e;
  e.box.assign(n, 0);
  std::uint64_t maxdeg = 0;
  for (const auto& g : I.generators()) {
    maxdeg = std::max(maxdeg, g.degree());
    for (std::size_t j = 0; j < n; ++j)
      e.box[j] = std::max(e.box[j], g[j] * q);
  }
  e.degree_cap = maxdeg * q;
  return e;
}

std::uint64_t min_generator_degree(const MonomialIdeal& I) {
  std::uint64_t d = ~std::uint64_t{0};
  for (const auto& g : I.generators()) d = std::min(d, g.degree());
  return d;
}

// All exponent vectors within the box with total degree exactly d, ascending
// lexicographically — a deterministic candidate order shared by the serial
// and parallel enumerations.
std::vector<Monomial> level_candidates(const std::vector<std::uint32_t>& box, std::uint64_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(box.size(), 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == box.size()) {
      if (left <= box[i]) {
        e[i] = static_cast<std::uint32_t>(left);
        out.push_back(Monomial(e));
      }
      return;
    }
    std::uint64_t hi = std::min<std::uint64_t>(box[i], left);
    for (std::uint64_t v = 0; v <= hi; ++v) {
      e[i] = static_cast<std::uint32_t>(v);
      rec(i + 1, left - v);
    }
  };
  if (!box.empty()) rec(0, d);
  return out;
}

template <bool Parallel>
MonomialIdeal closure_power(const MonomialIdeal& I, std::uint32_t q, EffortMeter& meter) {
  if (q == 0) throw DomainError("integral_closure_power: exponent must be positive");
  if (I.has_no_generators()) return I;
  ClosureEnumeration bounds = closure_bounds(I, q);
  NewtonPolyhedron P = NewtonPolyhedron::of(I);
  const std::uint64_t min_total = min_generator_degree(I) * q;

  std::vector<Monomial> members;
  for (std::uint64_t d = min_total; d <= bounds.degree_cap; ++d) {
    std::vector<Monomial> level = level_candidates(bounds.box, d);
    meter.charge(level.size());
    // prune against members found at lower degrees; survivors at the same
    // degree cannot divide one another
    std::vector<Monomial> open;
    open.reserve(level.size());
    for (auto& m : level) {
      bool covered = false;
      for (const auto& k : members)
        if (k.divides(m)) {
          covered = true;
          break;
        }
      if (!covered) open.push_back(std::move(m));
    }
    std::vector<char> in(open.size(), 0);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(open.size()); ++i)
        in[static_cast<std::size_t>(i)] = np_member(open[static_cast<std::size_t>(i)], q, P) ? 1 : 0;
    } else {
      for (std::size_t i = 0; i < open.size(); ++i) in[i] = np_member(open[i], q, P) ? 1 : 0;
    }
    for (std::size_t i = 0; i < open.size(); ++i)
      if (in[i]) members.push_back(std::move(open[i]));
  }
  return MonomialIdeal::make(I.ring(), std::move(members));
}

}  // namespace

MonomialIdeal integral_closure_power(const MonomialIdeal& I, std::uint32_t q, EffortMeter& meter) {
  return closure_power<true>(I, q, meter);
}

MonomialIdeal integral_closure_power_serial(const MonomialIdeal& I, std::uint32_t q,
                                            EffortMeter& meter) {
  return closure_power<false>(I, q, meter);
}

NormalityVerdict is_normal_up_to(const MonomialIdeal& I, std::uint32_t Q, EffortMeter& meter) {
  NormalityVerdict v;
  for (std::uint32_t q = 1; q <= Q; ++q) {
    MonomialIdeal power = monomial_power(I, q);
    MonomialIdeal closure = integral_closure_power(I, q, meter);
    if (power == closure) continue;
    v.normal = false;
    v.failing_power = q;
    for (const auto& m : closure.generators())
      if (!power.contains(m)) {
        v.witness = m;
        break;
      }
    return v;
  }
  return v;
}

ICProbe brute_force_ic_member(const Monomial& a, std::uint32_t q, const MonomialIdeal& I,
                              std::uint32_t w_max) {
  if (w_max == 0) throw DomainError("brute_force_ic_member: w_max must be positive");
  for (std::uint32_t w = 1; w <= w_max; ++w) {
    std::vector<std::uint32_t> scaled(a.arity());
    for (std::size_t j = 0; j < a.arity(); ++j) scaled[j] = a[j] * w;
    Monomial wa{std::move(scaled)};
    if (monomial_power(I, w * q).contains(wa)) return ICProbe::member;
  }
  return ICProbe::unknown;
}

}  // namespace gaussian
