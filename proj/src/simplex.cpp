#include "gaussian/simplex.hpp"

#include "gaussian/errors.hpp"

namespace gaussian {

// Tableau layout: one row per inequality (slack basic at start) plus a final
// equality row (artificial basic at start). Columns: the λ variables, then
// slacks, then the artificial, then the right-hand side. Phase 1 minimizes
// the artificial variable; the system is feasible iff the minimum is zero.
LPWitness scaled_hull_member(const std::vector<std::vector<std::uint32_t>>& rows,
                             const std::vector<std::uint32_t>& point, const mpq_class& scale) {
  if (rows.empty()) throw DomainError("scaled_hull_member: no generator rows");
  const std::size_t n = point.size();
  for (const auto& r : rows)
    if (r.size() != n) throw DomainError("scaled_hull_member: row arity mismatch");
  if (scale < 0) throw DomainError("scaled_hull_member: negative scale");

  const std::size_t g = rows.size();
  const std::size_t m = n + 1;           // constraint rows
  const std::size_t nv = g + n + 1;      // λ, slacks, artificial
  const std::size_t art = g + n;         // artificial column
  const std::size_t eq = n;              // equality row index

  std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(nv + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < g; ++i) T[j][i] = rows[i][j];
    T[j][g + j] = 1;  // slack
    T[j][nv] = point[j];
    basis[j] = g + j;
  }
  for (std::size_t i = 0; i < g; ++i) T[eq][i] = 1;
  T[eq][art] = 1;
  T[eq][nv] = scale;
  basis[eq] = art;

  // While the artificial is basic (in the equality row), its value is the
  // objective; the reduced cost of column j is −T[eq][j].
  for (;;) {
    if (basis[eq] != art) break;  // objective reached zero
    // Bland: smallest-index column that can decrease the artificial
    std::size_t enter = nv;
    for (std::size_t j = 0; j < nv; ++j) {
      if (j == art) continue;
      if (T[eq][j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == nv) break;  // optimal

    // ratio test over rows with positive pivot coefficient; Bland tie-break
    // on the smallest basic variable index
    std::size_t leave = m;
    mpq_class best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (T[r][enter] <= 0) continue;
      mpq_class ratio = T[r][nv] / T[r][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      // the objective column is unbounded below — cannot happen with the
      // artificial bounded by the equality row, but guard anyway
      break;
    }

    // pivot (leave, enter)
    mpq_class piv = T[leave][enter];
    for (std::size_t c = 0; c <= nv; ++c) T[leave][c] /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave) continue;
      if (T[r][enter] == 0) continue;
      mpq_class f = T[r][enter];
      for (std::size_t c = 0; c <= nv; ++c) T[r][c] -= f * T[leave][c];
    }
    basis[leave] = enter;
  }

  LPWitness w;
  mpq_class objective = (basis[eq] == art) ? T[eq][nv] : mpq_class(0);
  w.feasible = objective == 0;
  if (w.feasible) {
    w.weights.assign(g, mpq_class(0));
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] < g) w.weights[basis[r]] = T[r][nv];
  }
  return w;
}

}  // namespace gaussian
