#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussian/field.hpp"
#include "gaussian/report.hpp"

namespace gaussian {

struct ScenarioOptions {
  FieldSpec field = FieldSpec::parse("gf:32003");
  std::uint64_t budget_steps = 10'000'000;
  double budget_seconds = 120.0;
};

// Each runner executes one verification scenario under the given budgets and
// never throws: budget exhaustion and precondition violations are recorded in
// the claim statuses.

// Both product-content identities for generic degrees (m, n).
Scenario run_dedekind_mertens(std::uint32_t m, std::uint32_t n, const ScenarioOptions& opts);

// Exactness of the exponent: the identity holds at m and fails at m-1.
Scenario run_sharpness(std::uint32_t m, std::uint32_t n, const ScenarioOptions& opts);

// Reduction number of the product of contents with respect to the content of
// the product; degrees has two or three entries.
Scenario run_reduction_number(const std::vector<std::uint32_t>& degrees,
                              const ScenarioOptions& opts);

// Three-component intersection description of c(fg), plus the codimension of
// the linkage component.
Scenario run_primary_decomp2(std::uint32_t m, std::uint32_t n, const ScenarioOptions& opts);

// Seven-component intersection description of c(fgh). When the full
// intersection runs out of budget, the individually smaller identities from
// the same derivation chain are verified instead under a fresh budget.
Scenario run_primary_decomp3(std::uint32_t m, std::uint32_t n, std::uint32_t p,
                             const ScenarioOptions& opts);

// Banded-matrix specialization identities for the linkage component.
Scenario run_hu_specialization(std::uint32_t m, std::uint32_t n, const ScenarioOptions& opts);

// Toric kernel equals the determinantal ideal; height check.
Scenario run_toric_kernel(std::uint32_t m, std::uint32_t n, const ScenarioOptions& opts);

// Noether normalization by the diagonal forms: independence plus an Artinian
// quotient with the predicted top degree.
Scenario run_noether(std::uint32_t m, std::uint32_t n, const ScenarioOptions& opts);

// Fiber of the product ideal: analytic spread, reduction number read from the
// Artinian Hilbert function, its total, and the power-route cross-check.
Scenario run_fiber_reduction(const std::vector<std::uint32_t>& degrees,
                             const ScenarioOptions& opts);

// Normality of a monomial ideal up to the given power. Kinds:
//   "product"      three-factor product ideal on degrees (m, n, p)
//   "squares"      the non-normal control (x^2, y^2), expected witness x*y
//   "cycle:<k>" / "path:<k>" / "complete:<k>"   edge ideal of that graph
//   "json:<path>" / "edges:<path>"              edge ideal of a graph file
Scenario run_normality(const std::string& kind, std::uint32_t m, std::uint32_t n,
                       std::uint32_t p, std::uint32_t up_to, const ScenarioOptions& opts);

// Join of the edge ideals of two cycles, and the one-sided shape I + (X)(Y).
Scenario run_join_normality(std::size_t left_cycle, std::size_t right_cycle,
                            std::uint32_t up_to, const ScenarioOptions& opts);

// Experimental generalized-content probes over structure-constant algebras.
Scenario run_struct_content(const ScenarioOptions& opts);

// Randomized property batteries: basis invariants, intersection oracle
// agreement, and membership-route agreement. Fixed seeds; deterministic.
Scenario run_property_suite(const ScenarioOptions& opts);

// Budget rule for the seven-component intersection scenario: satisfied when
// the full intersection passed, or when it ran out of budget and every
// fallback identity passed.
bool seven_component_satisfied(const Scenario& s);

// One acceptance criterion: its scenarios plus the satisfaction rule.
struct CriterionResult {
  int index = 0;
  std::string description;
  bool satisfied = false;
  std::vector<Scenario> scenarios;
};

// Runs the full acceptance battery (criteria 1..11) with per-scenario budgets
// derived from `base` (rational-field runs get 10x wall clock; the
// seven-component intersection gets its dedicated budget). `jobs` > 1 runs
// independent scenarios on worker threads; results are ordered
// deterministically regardless.
std::vector<CriterionResult> run_acceptance_criteria(const ScenarioOptions& base,
                                                     unsigned jobs = 1);

// Flattens criterion results into a report.
Report report_from_criteria(const std::vector<CriterionResult>& criteria);

}  // namespace gaussian
