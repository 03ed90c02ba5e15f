#pragma once

#include <cstdint>
#include <vector>

#include "gaussian/groebner.hpp"
#include "gaussian/ideals.hpp"

namespace gaussian {

// Presentation of the special fiber of a product-of-variables ideal:
// one source variable per monomial generator, the toric ideal of relations
// among the generators, and the canonical degree-one forms that present a
// minimal reduction (l_q = sum of the source variables whose index tuple
// sums to q).
struct FiberPresentation {
  RingPtr source;
  Ideal toric;
  std::vector<Polynomial> linear_forms;
};

// Fiber of (x_i y_j : 0<=i<=m, 0<=j<=n): source variables Q{i}_{j}.
FiberPresentation segre_fiber(std::uint32_t m, std::uint32_t n, const FieldSpec& field,
                              EffortMeter& meter);
FiberPresentation segre_fiber(std::uint32_t m, std::uint32_t n, const FieldSpec& field,
                              const GBOptions& opts = {});

// Fiber of (x_i y_j z_k): source variables Q{i}_{j}_{k}.
FiberPresentation triple_fiber(std::uint32_t m, std::uint32_t n, std::uint32_t p,
                               const FieldSpec& field, EffortMeter& meter);
FiberPresentation triple_fiber(std::uint32_t m, std::uint32_t n, std::uint32_t p,
                               const FieldSpec& field, const GBOptions& opts = {});

struct MinorsKernelCheck {
  bool kernel_matches = false;  // toric ideal == 2x2 minors of the generic matrix
  int height = -1;              // arity - krull dimension of the toric quotient
};

// Compares the toric kernel for (m, n) against the 2x2 minors of a generic
// (m+1) x (n+1) matrix in the source variables, and reports the height.
MinorsKernelCheck check_minors_equal_kernel(std::uint32_t m, std::uint32_t n,
                                            const FieldSpec& field, EffortMeter& meter);
MinorsKernelCheck check_minors_equal_kernel(std::uint32_t m, std::uint32_t n,
                                            const FieldSpec& field,
                                            const GBOptions& opts = {});

struct NoetherCheck {
  bool forms_independent = false;  // the h_q admit no algebraic relation
  bool artinian = false;           // quotient by the forms has finite dimension
  // Hilbert function of source/(toric + forms) through the first zero entry
  // (empty when the function did not reach zero within the degree budget).
  std::vector<std::uint64_t> hilbert;
};

// Verifies that h_q = sum_{i+j=q} x_i y_j give a Noether normalization of
// the fiber: algebraic independence plus an Artinian quotient by the forms.
NoetherCheck check_noether_normalization(std::uint32_t m, std::uint32_t n,
                                         const FieldSpec& field, EffortMeter& meter);
NoetherCheck check_noether_normalization(std::uint32_t m, std::uint32_t n,
                                         const FieldSpec& field, const GBOptions& opts = {});

// Hilbert function of source/(toric + linear forms), computed through degree
// (number of forms) + 2 and trimmed at the first zero entry. Throws
// DomainError when the function has not reached zero within that budget.
std::vector<std::uint64_t> artinian_hilbert(const FiberPresentation& F, EffortMeter& meter);
std::vector<std::uint64_t> artinian_hilbert(const FiberPresentation& F,
                                            const GBOptions& opts = {});

// Top nonzero degree of the Artinian Hilbert function: the reduction number
// of the fiber with respect to the canonical forms.
std::uint32_t fiber_reduction_number(const FiberPresentation& F, EffortMeter& meter);
std::uint32_t fiber_reduction_number(const FiberPresentation& F, const GBOptions& opts = {});

// Krull dimension of source/toric.
int analytic_spread(const FiberPresentation& F, EffortMeter& meter);
int analytic_spread(const FiberPresentation& F, const GBOptions& opts = {});

// True when every reduced-basis element of the toric ideal has at most two
// terms.
bool toric_is_binomial(const FiberPresentation& F, EffortMeter& meter);
bool toric_is_binomial(const FiberPresentation& F, const GBOptions& opts = {});

}  // namespace gaussian
