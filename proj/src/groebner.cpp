#include "gaussian/groebner.hpp"

#include <algorithm>
#include <utility>

namespace gaussian {

EffortMeter::EffortMeter(const GBOptions& opts) : max_steps_(opts.max_steps) {
  if (opts.max_seconds > 0.0) {
    has_deadline_ = true;
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(opts.max_seconds));
  }
}

void EffortMeter::charge(std::uint64_t n) {
  steps_ += n;
  if (steps_ > max_steps_)
    throw BudgetExceededError("reduction-step budget exceeded (" + std::to_string(max_steps_) +
                              " steps)");
  // Poll the clock sparingly; charge() sits in the innermost loop.
  if (has_deadline_ && (++tick_ & 0x3ff) == 0) {
    if (std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceededError("wall-clock budget exceeded");
  }
}

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> generators) {
  std::vector<Polynomial> kept;
  kept.reserve(generators.size());
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring());
    kept.push_back(std::move(g));
  }
  Ideal I;
  I.ring_ = std::move(ring);
  I.gens_ = std::move(kept);
  return I;
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::one(ring);
  return make(std::move(ring), {std::move(one)});
}

bool GroebnerBasis::contains_one() const {
  return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero();
}

namespace {

// Basis element with its sugar degree (phantom homogenized degree).
struct Entry {
  Polynomial poly;
  std::uint64_t sugar = 0;
};

struct DivisionResult {
  Polynomial remainder;
  std::uint64_t sugar = 0;
};

// Multivariate division of p by the polynomials in G (first match on leading
// monomials, in index order). Fully reduces every term. Tracks the sugar of
// the result from start_sugar through each elementary reduction.
DivisionResult divide(const Polynomial& p, const std::vector<Entry>& G, std::uint64_t start_sugar,
                      EffortMeter& meter) {
  const Field& F = p.ring()->field();
  std::vector<Term> rem;
  Polynomial work = p;
  std::uint64_t sugar = start_sugar;
  while (!work.is_zero()) {
    const Term& head = work.leading();
    const Entry* red = nullptr;
    for (const auto& e : G) {
      if (e.poly.leading_monomial().divides(head.mono)) {
        red = &e;
        break;
      }
    }
    if (red == nullptr) {
      rem.push_back(head);
      work = work.tail();
      continue;
    }
    Monomial q = head.mono.quotient(red->poly.leading_monomial());
    Scalar c = F.div(head.coeff, red->poly.leading_coeff());
    sugar = std::max(sugar, red->sugar + q.degree());
    work = subtract_scaled(work, c, q, red->poly);
    meter.charge();
  }
  return {Polynomial::make(p.ring(), std::move(rem)), sugar};
}

// Scale to the canonical basis-element form used during the run: monic over a
// prime field; integer, coprime coefficients with positive leading
// coefficient over the rationals (keeps mpq growth in check).
Polynomial normalize_basis_element(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (p.ring()->field_spec().kind == FieldKind::prime_field) return p.monic();
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    const mpq_class& q = t.coeff.rational();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  mpq_canonicalize(scale.get_mpq_t());
  if (p.leading_coeff().rational() < 0) scale = -scale;
  return p.scaled(Scalar(mpq_class(scale)));
}

struct Pair {
  std::uint32_t i, j;  // i < j
  Monomial lcm;
  std::uint64_t sugar;
};

std::uint64_t pair_sugar(const std::vector<Entry>& G, std::uint32_t i, std::uint32_t j,
                         const Monomial& L) {
  std::uint64_t si = G[i].sugar + L.degree() - G[i].poly.leading_monomial().degree();
  std::uint64_t sj = G[j].sugar + L.degree() - G[j].poly.leading_monomial().degree();
  return std::max(si, sj);
}

// Pair-set maintenance when basis element t arrives: Buchberger's coprimality
// and chain criteria applied in the classic update formulation.
void update_pairs(std::vector<Pair>& P, const std::vector<Entry>& G, std::uint32_t t) {
  const Monomial& lt_t = G[t].poly.leading_monomial();

  struct Cand {
    std::uint32_t i;
    Monomial lcm;
    bool coprime;
    bool kept = false;
  };
  std::vector<Cand> cands;
  cands.reserve(t);
  for (std::uint32_t i = 0; i < t; ++i) {
    const Monomial& lt_i = G[i].poly.leading_monomial();
    cands.push_back({i, Monomial::lcm(lt_i, lt_t), lt_i.coprime_with(lt_t)});
  }

  for (std::size_t a = 0; a < cands.size(); ++a) {
    bool keep = cands[a].coprime;
    if (!keep) {
      bool dominated = false;
      for (std::size_t b = a + 1; b < cands.size() && !dominated; ++b)
        if (cands[b].lcm.divides(cands[a].lcm)) dominated = true;
      for (std::size_t b = 0; b < a && !dominated; ++b)
        if (cands[b].kept && cands[b].lcm.divides(cands[a].lcm)) dominated = true;
      keep = !dominated;
    }
    cands[a].kept = keep;
  }

  // Age out old pairs whose S-polynomial the newcomer subsumes.
  std::vector<Pair> survivors;
  survivors.reserve(P.size());
  for (auto& pr : P) {
    bool drop = lt_t.divides(pr.lcm) &&
                Monomial::lcm(G[pr.i].poly.leading_monomial(), lt_t) != pr.lcm &&
                Monomial::lcm(G[pr.j].poly.leading_monomial(), lt_t) != pr.lcm;
    if (!drop) survivors.push_back(std::move(pr));
  }
  for (auto& c : cands) {
    if (!c.kept || c.coprime) continue;
    std::uint64_t s = pair_sugar(G, c.i, t, c.lcm);
    survivors.push_back({c.i, t, std::move(c.lcm), s});
  }
  P = std::move(survivors);
}

// Lowest sugar first, then smaller lcm in the ring order, then lowest index.
std::size_t select_pair(const std::vector<Pair>& P, const MonomialOrder& ord) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < P.size(); ++k) {
    const Pair& a = P[k];
    const Pair& b = P[best];
    if (a.sugar != b.sugar) {
      if (a.sugar < b.sugar) best = k;
      continue;
    }
    int c = order_cmp(a.lcm, b.lcm, ord);
    if (c != 0) {
      if (c < 0) best = k;
      continue;
    }
    if (a.i != b.i ? a.i < b.i : a.j < b.j) best = k;
  }
  return best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& L) {
  const Field& F = f.ring()->field();
  Polynomial a = f.times_monomial(F.inv(f.leading_coeff()), L.quotient(f.leading_monomial()));
  Polynomial b = g.times_monomial(F.inv(g.leading_coeff()), L.quotient(g.leading_monomial()));
  return a - b;
}

std::vector<Polynomial> reduce_final_basis(const RingPtr& ring, std::vector<Entry>& G,
                                           EffortMeter& meter) {
  // Minimal generators of the leading-term ideal: drop any element whose
  // leading monomial a later element divides (equal leading monomials cannot
  // occur — every addition was in normal form w.r.t. its predecessors).
  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& li = G[i].poly.leading_monomial();
      const Monomial& lj = G[j].poly.leading_monomial();
      if (lj != li && lj.divides(li)) keep[i] = false;
    }
  }
  std::vector<Entry> minimal;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(G[i]));

  // Tail-reduce each element against the others; leading terms are an
  // antichain, so heads survive and one pass suffices.
  std::vector<Polynomial> out(minimal.size(), Polynomial::zero(ring));
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Entry> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back({out[j].is_zero() ? minimal[j].poly : out[j], 0});
    out[i] = divide(minimal[i].poly, others, 0, meter).remainder.monic();
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order_cmp(a.leading_monomial(), b.leading_monomial(), ring->order()) < 0;
  });
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& I, EffortMeter& meter) {
  const RingPtr& ring = I.ring();
  std::uint64_t steps_at_entry = meter.steps();

  std::vector<Entry> G;
  std::vector<Pair> P;
  for (const auto& gen : I.generators()) {
    DivisionResult r = divide(gen, G, gen.degree(), meter);
    if (r.remainder.is_zero()) continue;
    G.push_back({normalize_basis_element(r.remainder), r.sugar});
    update_pairs(P, G, static_cast<std::uint32_t>(G.size() - 1));
  }

  while (!P.empty()) {
    std::size_t k = select_pair(P, ring->order());
    Pair pr = std::move(P[k]);
    P.erase(P.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial s = s_polynomial(G[pr.i].poly, G[pr.j].poly, pr.lcm);
    meter.charge();
    DivisionResult r = divide(s, G, pr.sugar, meter);
    if (r.remainder.is_zero()) continue;
    G.push_back({normalize_basis_element(r.remainder), r.sugar});
    update_pairs(P, G, static_cast<std::uint32_t>(G.size() - 1));
  }

  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.basis_ = reduce_final_basis(ring, G, meter);
  gb.steps_used_ = meter.steps() - steps_at_entry;
  return gb;
}

GroebnerBasis buchberger(const Ideal& I, const GBOptions& opts) {
  EffortMeter meter(opts);
  return buchberger(I, meter);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G, EffortMeter& meter) {
  require_same_ring(p.ring(), G.ring());
  std::vector<Entry> entries;
  entries.reserve(G.basis().size());
  for (const auto& g : G.basis()) entries.push_back({g, 0});
  return divide(p, entries, 0, meter).remainder;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  EffortMeter meter;
  return normal_form(p, G, meter);
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& G, EffortMeter& meter) {
  return normal_form(p, G, meter).is_zero();
}

bool ideal_member(const Polynomial& p, const Ideal& I, const GBOptions& opts) {
  EffortMeter meter(opts);
  GroebnerBasis G = buchberger(I, meter);
  return ideal_member(p, G, meter);
}

bool ideal_equal(const Ideal& I, const Ideal& J, EffortMeter& meter) {
  require_same_ring(I.ring(), J.ring());
  GroebnerBasis GI = buchberger(I, meter);
  GroebnerBasis GJ = buchberger(J, meter);
  if (GI.basis().size() != GJ.basis().size()) return false;
  for (std::size_t k = 0; k < GI.basis().size(); ++k)
    if (GI.basis()[k] != GJ.basis()[k]) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GBOptions& opts) {
  EffortMeter meter(opts);
  return ideal_equal(I, J, meter);
}

Ideal eliminate(const Ideal& I, std::size_t k, EffortMeter& meter) {
  const RingPtr& ring = I.ring();
  if (k == 0 || k >= ring->arity())
    throw DomainError("eliminate: block size must be in [1, arity)");

  RingPtr elim_ring = PolyRing::make(ring->variables(), ring->field_spec(),
                                     MonomialOrder::block_elim(k));
  std::vector<Polynomial> rebased;
  rebased.reserve(I.generators().size());
  for (const auto& g : I.generators()) rebased.push_back(g.rebase(elim_ring));
  GroebnerBasis G = buchberger(Ideal::make(elim_ring, std::move(rebased)), meter);

  std::vector<std::string> small_vars(ring->variables().begin() +
                                          static_cast<std::ptrdiff_t>(k),
                                      ring->variables().end());
  RingPtr small = PolyRing::make(std::move(small_vars), ring->field_spec());
  std::vector<std::size_t> var_map(small->arity());
  for (std::size_t j = 0; j < small->arity(); ++j) var_map[j] = k + j;

  std::vector<Polynomial> kept;
  for (const auto& g : G.basis()) {
    bool free_of_block = true;
    for (std::size_t i = 0; i < k && free_of_block; ++i)
      if (g.leading_monomial()[i] != 0) free_of_block = false;
    // In a block elimination order the leading monomial sees the first block
    // whenever any term does, so checking it alone is enough.
    if (free_of_block) kept.push_back(g.contract(small, var_map));
  }
  return Ideal::make(small, std::move(kept));
}

Ideal eliminate(const Ideal& I, std::size_t k, const GBOptions& opts) {
  EffortMeter meter(opts);
  return eliminate(I, k, meter);
}

bool spairs_confluent(const GroebnerBasis& G, EffortMeter& meter) {
  const auto& B = G.basis();
  std::vector<Entry> entries;
  entries.reserve(B.size());
  for (const auto& g : B) entries.push_back({g, 0});
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      Monomial L = Monomial::lcm(B[i].leading_monomial(), B[j].leading_monomial());
      Polynomial s = s_polynomial(B[i], B[j], L);
      if (!divide(s, entries, 0, meter).remainder.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace gaussian
