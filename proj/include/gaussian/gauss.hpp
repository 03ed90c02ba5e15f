#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussian/groebner.hpp"
#include "gaussian/ideals.hpp"
#include "gaussian/poly.hpp"

namespace gaussian {

// Generic polynomials f = sum x_i t^i, g = sum y_j t^j (optionally
// h = sum z_k t^k) whose coefficients are independent ring variables.
// Degrees are normalized so deg f <= deg g (<= deg h); the coefficient
// ring is k[x0..xm, y0..yn(, z0..zp)] in degrevlex order.
class GenericSetup {
 public:
  static GenericSetup pair(std::uint32_t m, std::uint32_t n, const FieldSpec& field);
  static GenericSetup triple(std::uint32_t m, std::uint32_t n, std::uint32_t p,
                             const FieldSpec& field);

  const RingPtr& ring() const { return ring_; }
  std::size_t count() const { return polys_.size(); }
  std::uint32_t degree(std::size_t which) const { return degrees_.at(which); }
  const UniPoly& poly(std::size_t which) const { return polys_.at(which); }
  const UniPoly& f() const { return polys_[0]; }
  const UniPoly& g() const { return polys_[1]; }
  const UniPoly& h() const { return polys_.at(2); }

 private:
  GenericSetup() = default;
  RingPtr ring_;
  std::vector<std::uint32_t> degrees_;
  std::vector<UniPoly> polys_;
};

// Ideal generated by the coefficients of u; content of 0 is (0).
Ideal content(const UniPoly& u);

// True iff I^{r+1} == J * I^r. Requires J subset of I (checked; DomainError
// otherwise, so a "false" answer always means the displayed equality fails).
bool is_reduction(const Ideal& J, const Ideal& I, std::uint32_t r, EffortMeter& meter);
bool is_reduction(const Ideal& J, const Ideal& I, std::uint32_t r,
                  const GBOptions& opts = {});

// Least r <= r_max with is_reduction(J, I, r); nullopt when every r fails.
// Once the equality holds it holds for all larger r, so the scan stops at
// the first success.
std::optional<std::uint32_t> reduction_number(const Ideal& J, const Ideal& I,
                                              std::uint32_t r_max, EffortMeter& meter);
std::optional<std::uint32_t> reduction_number(const Ideal& J, const Ideal& I,
                                              std::uint32_t r_max,
                                              const GBOptions& opts = {});

struct ContentFormulaCheck {
  bool main_identity = false;     // c(fg) c(g)^m == c(f) c(g)^{m+1}
  bool decayed_identity = false;  // c(fg) [c(f)c(g)]^m == [c(f)c(g)]^{m+1}
  bool ok() const { return main_identity && decayed_identity; }
};

// Dedekind-Mertens: verifies both displayed identities, m = deg f <= deg g.
ContentFormulaCheck check_dedekind_mertens(const GenericSetup& s, EffortMeter& meter);
ContentFormulaCheck check_dedekind_mertens(const GenericSetup& s,
                                           const GBOptions& opts = {});

// Sharpness control: the main identity with exponent m replaced by m-1,
// i.e. c(fg) c(g)^{m-1} == c(f) c(g)^m. Expected to FAIL for generic setups.
bool dedekind_mertens_with_dropped_exponent(const GenericSetup& s, EffortMeter& meter);

// Linkage component attached to two polynomials:
//   c(ab) + c(a)^{deg b + 1} + c(b)^{deg a + 1}.
// L2(s) is this ideal for (f, g) of a two-polynomial setup.
Ideal linkage_pair(const UniPoly& a, const UniPoly& b);
Ideal L2(const GenericSetup& s);

// Seven-summand analogue for a three-polynomial setup (m, n, p):
//   c(fgh) + c(fg)^{p+1} + c(fh)^{n+1} + c(gh)^{m+1}
//         + c(f)^{n+p+1} + c(g)^{m+p+1} + c(h)^{m+n+1}.
Ideal L3(const GenericSetup& s);

// c(fg) == c(f) /\ c(g) /\ L2, via iterated elimination intersections.
bool check_primary_decomposition2(const GenericSetup& s, EffortMeter& meter);
bool check_primary_decomposition2(const GenericSetup& s, const GBOptions& opts = {});

// c(fgh) == c(f) /\ c(g) /\ c(h) /\ L(f,g) /\ L(f,h) /\ L(g,h) /\ L3.
bool check_primary_decomposition3(const GenericSetup& s, EffortMeter& meter);
bool check_primary_decomposition3(const GenericSetup& s, const GBOptions& opts = {});

// Condensed form of the same decomposition (first step of the absorption
// chain): c(fg) /\ c(fh) /\ c(gh) /\ L3 == c(fgh).
bool check_triple_condensed(const GenericSetup& s, EffortMeter& meter);

// Banded specialization data: the coefficient row X = (x0..xm) and the
// (m+1) x (m+n+1) matrix phi whose row i carries y0..yn shifted i places.
struct HUData {
  std::vector<Polynomial> X;
  std::vector<std::vector<Polynomial>> phi;
};

HUData hu_data(const GenericSetup& s);

struct HUCheck {
  bool row_times_matrix = false;  // entries of X*phi generate c(fg)
  bool row_power = false;         // (X)^{n+1} == c(f)^{n+1}
  bool maximal_minors = false;    // I_{m+1}(phi) == c(g)^{m+1}
  bool ok() const { return row_times_matrix && row_power && maximal_minors; }
};

// Verifies the three identifications that present L2 as a specialization of
// a Huneke-Ulrich ideal (X*phi) + (X)^{s-r+1} + I_r(phi).
HUCheck hu_check(const GenericSetup& s, EffortMeter& meter);
HUCheck hu_check(const GenericSetup& s, const GBOptions& opts = {});

// Determinant by cofactor expansion along the first row (exact, small sizes).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& mat, const RingPtr& ring);

// Ideal of all r x r minors of an r x s matrix (r <= s): every column subset.
Ideal maximal_minors(const std::vector<std::vector<Polynomial>>& mat, const RingPtr& ring);

// Free algebra over a polynomial base ring with basis e_0..e_{rank-1} and
// multiplication table e_i e_j = sum_k table[i][j][k] e_k. The table need
// not be associative; associativity is checkable.
class StructureAlgebra {
 public:
  static StructureAlgebra make(RingPtr base, std::vector<std::string> labels,
                               std::vector<std::vector<std::vector<Polynomial>>> table);
  // Basis 1, t, .., t^{rank-1} with t^a t^b = t^{a+b} truncated to zero when
  // a+b >= rank.
  static StructureAlgebra truncated_power(RingPtr base, std::size_t rank);
  // Group table of Z/rank: e_a e_b = e_{(a+b) mod rank}.
  static StructureAlgebra cyclic_group(RingPtr base, std::size_t rank);

  std::size_t rank() const { return labels_.size(); }
  const RingPtr& base() const { return base_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Polynomial& table(std::size_t i, std::size_t j, std::size_t k) const;

  // Coefficient vector of (sum u_i e_i)(sum v_j e_j).
  std::vector<Polynomial> multiply(const std::vector<Polynomial>& u,
                                   const std::vector<Polynomial>& v) const;
  bool is_associative() const;

 private:
  StructureAlgebra() = default;
  RingPtr base_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<Polynomial>>> table_;
};

// Ideal of the coefficients of an element given in the fixed basis.
Ideal struct_content(const StructureAlgebra& A, const std::vector<Polynomial>& element);

struct StructureProbe {
  bool containment = false;  // c(uv) subset of c(u)c(v)
  std::optional<std::uint32_t> reduction;  // least r <= rank with the identity
};

// Containment and reduction verdicts for a specific pair of elements.
// Verdicts are experimental, not certificates.
StructureProbe probe_structure_elements(const StructureAlgebra& A,
                                        const std::vector<Polynomial>& u,
                                        const std::vector<Polynomial>& v,
                                        EffortMeter& meter);

// Same probe with two fully generic elements: the base of A must provide at
// least 2*rank variables; the first rank are used for u, the next rank for v.
StructureProbe probe_structure_algebra(const StructureAlgebra& A, EffortMeter& meter);

}  // namespace gaussian
