#include "gaussian/fiber.hpp"

#include <string>
#include <utility>

#include "gaussian/errors.hpp"

namespace gaussian {

namespace {

// Canonical forms l_q = sum of source variables whose index tuple sums to q,
// given the tuple-sum of each source variable in order.
std::vector<Polynomial> canonical_forms(const RingPtr& source,
                                        const std::vector<std::uint32_t>& tuple_sum,
                                        std::uint32_t max_sum) {
  std::vector<Polynomial> forms(max_sum + 1, Polynomial::zero(source));
  for (std::size_t v = 0; v < tuple_sum.size(); ++v)
    forms[tuple_sum[v]] = forms[tuple_sum[v]] + Polynomial::variable(source, v);
  return forms;
}

}  // namespace

FiberPresentation segre_fiber(std::uint32_t m, std::uint32_t n, const FieldSpec& field,
                              EffortMeter& meter) {
  std::vector<std::string> base_names;
  for (std::uint32_t i = 0; i <= m; ++i) base_names.push_back("x" + std::to_string(i));
  for (std::uint32_t j = 0; j <= n; ++j) base_names.push_back("y" + std::to_string(j));
  RingPtr base = PolyRing::make(std::move(base_names), field, MonomialOrder::degrevlex());

  std::vector<std::string> source_names;
  std::vector<Polynomial> targets;
  std::vector<std::uint32_t> tuple_sum;
  for (std::uint32_t i = 0; i <= m; ++i)
    for (std::uint32_t j = 0; j <= n; ++j) {
      source_names.push_back("Q" + std::to_string(i) + "_" + std::to_string(j));
      targets.push_back(Polynomial::variable(base, i) *
                        Polynomial::variable(base, m + 1 + j));
      tuple_sum.push_back(i + j);
    }

  FiberPresentation F;
  F.toric = kernel_of_map(targets, source_names, meter);
  F.source = F.toric.ring();
  F.linear_forms = canonical_forms(F.source, tuple_sum, m + n);
  return F;
}

FiberPresentation segre_fiber(std::uint32_t m, std::uint32_t n, const FieldSpec& field,
                              const GBOptions& opts) {
  EffortMeter meter(opts);
  return segre_fiber(m, n, field, meter);
}

FiberPresentation triple_fiber(std::uint32_t m, std::uint32_t n, std::uint32_t p,
                               const FieldSpec& field, EffortMeter& meter) {
  std::vector<std::string> base_names;
  for (std::uint32_t i = 0; i <= m; ++i) base_names.push_back("x" + std::to_string(i));
  for (std::uint32_t j = 0; j <= n; ++j) base_names.push_back("y" + std::to_string(j));
  for (std::uint32_t k = 0; k <= p; ++k) base_names.push_back("z" + std::to_string(k));
  RingPtr base = PolyRing::make(std::move(base_names), field, MonomialOrder::degrevlex());

  std::vector<std::string> source_names;
  std::vector<Polynomial> targets;
  std::vector<std::uint32_t> tuple_sum;
  for (std::uint32_t i = 0; i <= m; ++i)
    for (std::uint32_t j = 0; j <= n; ++j)
      for (std::uint32_t k = 0; k <= p; ++k) {
        source_names.push_back("Q" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                               std::to_string(k));
        targets.push_back(Polynomial::variable(base, i) *
                          Polynomial::variable(base, m + 1 + j) *
                          Polynomial::variable(base, m + n + 2 + k));
        tuple_sum.push_back(i + j + k);
      }

  FiberPresentation F;
  F.toric = kernel_of_map(targets, source_names, meter);
  F.source = F.toric.ring();
  F.linear_forms = canonical_forms(F.source, tuple_sum, m + n + p);
  return F;
}

FiberPresentation triple_fiber(std::uint32_t m, std::uint32_t n, std::uint32_t p,
                               const FieldSpec& field, const GBOptions& opts) {
  EffortMeter meter(opts);
  return triple_fiber(m, n, p, field, meter);
}

MinorsKernelCheck check_minors_equal_kernel(std::uint32_t m, std::uint32_t n,
                                            const FieldSpec& field, EffortMeter& meter) {
  if (m < 1 || n < 1) throw DomainError("minors comparison needs degrees >= 1");
  FiberPresentation F = segre_fiber(m, n, field, meter);

  // Source variables are laid out row-major: Q(i,j) at index i*(n+1)+j.
  auto entry = [&](std::uint32_t i, std::uint32_t j) {
    return Polynomial::variable(F.source, static_cast<std::size_t>(i) * (n + 1) + j);
  };
  std::vector<Polynomial> minors;
  for (std::uint32_t i = 0; i <= m; ++i)
    for (std::uint32_t r = i + 1; r <= m; ++r)
      for (std::uint32_t j = 0; j <= n; ++j)
        for (std::uint32_t c = j + 1; c <= n; ++c)
          minors.push_back(entry(i, j) * entry(r, c) - entry(i, c) * entry(r, j));

  MinorsKernelCheck out;
  out.kernel_matches = ideal_equal(Ideal::make(F.source, minors), F.toric, meter);
  out.height = static_cast<int>(F.source->arity()) - krull_dimension(F.toric, meter);
  return out;
}

MinorsKernelCheck check_minors_equal_kernel(std::uint32_t m, std::uint32_t n,
                                            const FieldSpec& field, const GBOptions& opts) {
  EffortMeter meter(opts);
  return check_minors_equal_kernel(m, n, field, meter);
}

std::vector<std::uint64_t> artinian_hilbert(const FiberPresentation& F, EffortMeter& meter) {
  Ideal quotient = ideal_sum(F.toric, Ideal::make(F.source, F.linear_forms));
  auto budget = static_cast<std::uint32_t>(F.linear_forms.size()) + 2;
  std::vector<std::uint64_t> hf = hilbert_function(quotient, budget, meter);
  for (std::size_t d = 0; d < hf.size(); ++d)
    if (hf[d] == 0) {
      hf.resize(d + 1);
      return hf;
    }
  throw DomainError("quotient by the linear forms is not Artinian within degree " +
                    std::to_string(budget));
}

std::vector<std::uint64_t> artinian_hilbert(const FiberPresentation& F,
                                            const GBOptions& opts) {
  EffortMeter meter(opts);
  return artinian_hilbert(F, meter);
}

std::uint32_t fiber_reduction_number(const FiberPresentation& F, EffortMeter& meter) {
  std::vector<std::uint64_t> hf = artinian_hilbert(F, meter);
  return static_cast<std::uint32_t>(hf.size() - 2);
}

std::uint32_t fiber_reduction_number(const FiberPresentation& F, const GBOptions& opts) {
  EffortMeter meter(opts);
  return fiber_reduction_number(F, meter);
}

NoetherCheck check_noether_normalization(std::uint32_t m, std::uint32_t n,
                                         const FieldSpec& field, EffortMeter& meter) {
  std::vector<std::string> base_names;
  for (std::uint32_t i = 0; i <= m; ++i) base_names.push_back("x" + std::to_string(i));
  for (std::uint32_t j = 0; j <= n; ++j) base_names.push_back("y" + std::to_string(j));
  RingPtr base = PolyRing::make(std::move(base_names), field, MonomialOrder::degrevlex());

  std::vector<Polynomial> h(m + n + 1, Polynomial::zero(base));
  for (std::uint32_t i = 0; i <= m; ++i)
    for (std::uint32_t j = 0; j <= n; ++j)
      h[i + j] = h[i + j] + Polynomial::variable(base, i) * Polynomial::variable(base, m + 1 + j);
  std::vector<std::string> h_names;
  for (std::uint32_t q = 0; q <= m + n; ++q) h_names.push_back("h" + std::to_string(q));

  NoetherCheck out;
  out.forms_independent = kernel_of_map(h, h_names, meter).has_no_generators();
  FiberPresentation F = segre_fiber(m, n, field, meter);
  try {
    out.hilbert = artinian_hilbert(F, meter);
    out.artinian = true;
  } catch (const DomainError&) {
    out.artinian = false;
  }
  return out;
}

NoetherCheck check_noether_normalization(std::uint32_t m, std::uint32_t n,
                                         const FieldSpec& field, const GBOptions& opts) {
  EffortMeter meter(opts);
  return check_noether_normalization(m, n, field, meter);
}

int analytic_spread(const FiberPresentation& F, EffortMeter& meter) {
  return krull_dimension(F.toric, meter);
}

int analytic_spread(const FiberPresentation& F, const GBOptions& opts) {
  EffortMeter meter(opts);
  return analytic_spread(F, meter);
}

bool toric_is_binomial(const FiberPresentation& F, EffortMeter& meter) {
  GroebnerBasis G = buchberger(F.toric, meter);
  for (const Polynomial& b : G.basis())
    if (b.terms().size() > 2) return false;
  return true;
}

bool toric_is_binomial(const FiberPresentation& F, const GBOptions& opts) {
  EffortMeter meter(opts);
  return toric_is_binomial(F, meter);
}

}  // namespace gaussian
