#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace gaussian {

struct LPWitness {
  bool feasible = false;
  // When feasible: weights λ with Σλ = scale and Σ λ_i · row_i ≤ point.
  std::vector<mpq_class> weights;
};

// Decide, in exact rational arithmetic, whether the point lies in
// scale · conv(rows) + R^n≥0: find λ ≥ 0 with Σλ = scale and
// Σ λ_i rows[i][j] ≤ point[j] for every coordinate j.
// Phase-1 simplex with Bland's rule (deterministic, no cycling).
LPWitness scaled_hull_member(const std::vector<std::vector<std::uint32_t>>& rows,
                             const std::vector<std::uint32_t>& point, const mpq_class& scale);

}  // namespace gaussian
