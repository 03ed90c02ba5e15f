#include "gaussian/ideals.hpp"

#include <algorithm>
#include <functional>

namespace gaussian {

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal::make(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal::make(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, std::uint32_t e) {
  if (e == 0) return Ideal::unit(I.ring());
  const auto& gens = I.generators();
  std::vector<Polynomial> out;
  // multisets of size e over the generator indices, enumerated ascending
  std::function<void(std::size_t, std::size_t, const Polynomial&)> rec =
      [&](std::size_t slot, std::size_t from, const Polynomial& acc) {
        if (slot == e) {
          out.push_back(acc);
          return;
        }
        for (std::size_t k = from; k < gens.size(); ++k) rec(slot + 1, k, acc * gens[k]);
      };
  if (!gens.empty()) rec(0, 0, Polynomial::one(I.ring()));
  return Ideal::make(I.ring(), std::move(out));
}

namespace {

std::string fresh_aux_name(const PolyRing& ring) {
  std::string name = "u";
  while (ring.variable_index(name) >= 0) name += "_";
  return name;
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J, EffortMeter& meter) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& R = I.ring();

  std::vector<std::string> vars;
  vars.reserve(R->arity() + 1);
  vars.push_back(fresh_aux_name(*R));
  vars.insert(vars.end(), R->variables().begin(), R->variables().end());
  RingPtr U = PolyRing::make(std::move(vars), R->field_spec(), MonomialOrder::block_elim(1));

  std::vector<std::size_t> into(R->arity());
  for (std::size_t i = 0; i < R->arity(); ++i) into[i] = i + 1;
  Polynomial u = Polynomial::variable(U, 0);
  Polynomial one_minus_u = Polynomial::one(U) - u;

  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() + J.generators().size());
  for (const auto& f : I.generators()) gens.push_back(u * f.embed(U, into));
  for (const auto& g : J.generators()) gens.push_back(one_minus_u * g.embed(U, into));

  Ideal E = eliminate(Ideal::make(U, std::move(gens)), 1, meter);
  std::vector<Polynomial> back;
  back.reserve(E.generators().size());
  for (const auto& g : E.generators()) back.push_back(g.rebase(R));
  return Ideal::make(R, std::move(back));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J, const GBOptions& opts) {
  EffortMeter meter(opts);
  return ideal_intersect(I, J, meter);
}

Ideal kernel_of_map(const std::vector<Polynomial>& targets,
                    const std::vector<std::string>& source_names, EffortMeter& meter) {
  if (targets.empty()) throw DomainError("kernel_of_map: no targets");
  if (targets.size() != source_names.size())
    throw DomainError("kernel_of_map: one source name per target required");
  const RingPtr& R = targets.front().ring();
  for (const auto& t : targets) {
    require_same_ring(R, t.ring());
    if (t.is_zero()) throw DomainError("kernel_of_map: zero target");
  }
  for (const auto& s : source_names)
    if (R->variable_index(s) >= 0)
      throw DomainError("kernel_of_map: source name '" + s + "' collides with a target variable");

  // big ring [X..., S...], eliminating the X block
  std::vector<std::string> vars = R->variables();
  vars.insert(vars.end(), source_names.begin(), source_names.end());
  const std::size_t nx = R->arity();
  RingPtr big = PolyRing::make(std::move(vars), R->field_spec(), MonomialOrder::block_elim(nx));

  std::vector<std::size_t> into(nx);
  for (std::size_t i = 0; i < nx; ++i) into[i] = i;
  std::vector<Polynomial> gens;
  gens.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    gens.push_back(Polynomial::variable(big, nx + i) - targets[i].embed(big, into));

  return eliminate(Ideal::make(big, std::move(gens)), nx, meter);
}

Ideal kernel_of_map(const std::vector<Polynomial>& targets,
                    const std::vector<std::string>& source_names, const GBOptions& opts) {
  EffortMeter meter(opts);
  return kernel_of_map(targets, source_names, meter);
}

namespace {

// Minimum number of variables meeting every support, by branch and bound on
// the first unhit support.
void cover_search(const std::vector<std::uint64_t>& supports, std::uint64_t chosen,
                  std::size_t used, std::size_t& best) {
  if (used >= best) return;
  std::uint64_t unhit = 0;
  for (std::uint64_t s : supports) {
    if ((s & chosen) == 0) {
      unhit = s;
      break;
    }
  }
  if (unhit == 0) {
    best = used;
    return;
  }
  while (unhit != 0) {
    std::uint64_t bit = unhit & (~unhit + 1);
    unhit ^= bit;
    cover_search(supports, chosen | bit, used + 1, best);
  }
}

}  // namespace

int krull_dimension(const Ideal& I, EffortMeter& meter) {
  const RingPtr& R = I.ring();
  if (R->arity() > 64) throw DomainError("krull_dimension: arity above 64 unsupported");
  GroebnerBasis G = buchberger(I, meter);
  if (G.contains_one()) throw DomainError("krull_dimension: unit ideal");
  std::vector<std::uint64_t> supports;
  supports.reserve(G.basis().size());
  for (const auto& g : G.basis()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < R->arity(); ++i)
      if (g.leading_monomial()[i] != 0) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  // drop supports that contain another (hitting the smaller one hits both)
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t s : supports) {
    bool redundant = false;
    for (std::uint64_t t : supports)
      if (t != s && (t & s) == t) redundant = true;
    if (!redundant && std::find(minimal.begin(), minimal.end(), s) == minimal.end())
      minimal.push_back(s);
  }
  std::size_t best = R->arity();
  cover_search(minimal, 0, 0, best);
  return static_cast<int>(R->arity() - best);
}

int krull_dimension(const Ideal& I, const GBOptions& opts) {
  EffortMeter meter(opts);
  return krull_dimension(I, meter);
}

std::vector<std::uint64_t> hilbert_function(const Ideal& I, std::uint32_t max_degree,
                                            EffortMeter& meter) {
  for (const auto& g : I.generators())
    if (!g.is_homogeneous())
      throw DomainError("hilbert_function: non-homogeneous generator " + format_poly(g));
  GroebnerBasis G = buchberger(I, meter);
  std::vector<Monomial> lts;
  lts.reserve(G.basis().size());
  for (const auto& g : G.basis()) lts.push_back(g.leading_monomial());

  const std::size_t n = I.ring()->arity();
  std::vector<std::uint64_t> counts(max_degree + 1, 0);
  std::vector<std::uint32_t> e(n, 0);
  // enumerate all exponent vectors of total degree d, counting those no
  // leading term divides
  std::function<void(std::size_t, std::uint32_t, std::uint32_t)> rec =
      [&](std::size_t i, std::uint32_t left, std::uint32_t d) {
        if (i + 1 == n) {
          e[i] = left;
          meter.charge();
          Monomial m(e);
          bool standard = true;
          for (const auto& lt : lts)
            if (lt.divides(m)) {
              standard = false;
              break;
            }
          if (standard) ++counts[d];
          return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
          e[i] = v;
          rec(i + 1, left - v, d);
        }
      };
  for (std::uint32_t d = 0; d <= max_degree; ++d) rec(0, d, d);
  return counts;
}

std::vector<std::uint64_t> hilbert_function(const Ideal& I, std::uint32_t max_degree,
                                            const GBOptions& opts) {
  EffortMeter meter(opts);
  return hilbert_function(I, max_degree, meter);
}

}  // namespace gaussian
