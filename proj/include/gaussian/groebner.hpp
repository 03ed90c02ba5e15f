#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "gaussian/poly.hpp"

namespace gaussian {

struct GBOptions {
  // Cap on reduction steps (one top-term cancellation each).
  std::uint64_t max_steps = 10'000'000;
  // Wall-clock limit in seconds; 0 disables the clock.
  double max_seconds = 0.0;
};

// Shared effort meter for one logical computation, which may span several
// basis runs (eliminations, equality checks, intersections...). Throws
// BudgetExceededError once either limit is crossed.
class EffortMeter {
 public:
  explicit EffortMeter(const GBOptions& opts = {});

  void charge(std::uint64_t n = 1);
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
  std::uint32_t tick_ = 0;
  bool has_deadline_ = false;
  std::chrono::steady_clock::time_point deadline_{};
};

// Generator list; zero generators are dropped on construction.
class Ideal {
 public:
  static Ideal make(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(RingPtr ring) { return make(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_no_generators() const { return gens_.empty(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

// Reduced Gröbner basis: monic elements, no term of one divisible by the
// leading monomial of another, sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool contains_one() const;
  // Reduction steps spent computing this basis.
  std::uint64_t steps_used() const { return steps_used_; }

 private:
  friend GroebnerBasis buchberger(const Ideal&, EffortMeter&);

  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::uint64_t steps_used_ = 0;
};

GroebnerBasis buchberger(const Ideal& I, EffortMeter& meter);
GroebnerBasis buchberger(const Ideal& I, const GBOptions& opts = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G, EffortMeter& meter);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

bool ideal_member(const Polynomial& p, const GroebnerBasis& G, EffortMeter& meter);
bool ideal_member(const Polynomial& p, const Ideal& I, const GBOptions& opts = {});

bool ideal_equal(const Ideal& I, const Ideal& J, EffortMeter& meter);
bool ideal_equal(const Ideal& I, const Ideal& J, const GBOptions& opts = {});

// I ∩ k[v_k, ..., v_{n-1}] as an ideal of the polynomial ring on the last
// arity−k variables (degrevlex). Re-bases I to the block elimination order.
Ideal eliminate(const Ideal& I, std::size_t k, EffortMeter& meter);
Ideal eliminate(const Ideal& I, std::size_t k, const GBOptions& opts = {});

// Property-test hook: every S-polynomial of the basis reduces to zero.
bool spairs_confluent(const GroebnerBasis& G, EffortMeter& meter);

}  // namespace gaussian
