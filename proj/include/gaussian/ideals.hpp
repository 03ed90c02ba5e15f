#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussian/groebner.hpp"

namespace gaussian {

// Concatenated generators.
Ideal ideal_sum(const Ideal& I, const Ideal& J);
// All pairwise products of generators.
Ideal ideal_product(const Ideal& I, const Ideal& J);
// All degree-e multiset products of generators; power(I, 0) = (1).
Ideal ideal_power(const Ideal& I, std::uint32_t e);

// I ∩ J via one auxiliary variable u adjoined first: eliminate u from
// u·I + (1−u)·J. Result is returned in the ring of I.
Ideal ideal_intersect(const Ideal& I, const Ideal& J, EffortMeter& meter);
Ideal ideal_intersect(const Ideal& I, const Ideal& J, const GBOptions& opts = {});

// Kernel of the map k[source_names] -> ring of targets, S_i ↦ targets[i]:
// the ideal of all algebraic relations among the targets, as an ideal of a
// fresh polynomial ring on source_names (degrevlex).
Ideal kernel_of_map(const std::vector<Polynomial>& targets,
                    const std::vector<std::string>& source_names, EffortMeter& meter);
Ideal kernel_of_map(const std::vector<Polynomial>& targets,
                    const std::vector<std::string>& source_names, const GBOptions& opts = {});

// Krull dimension of ring/I: arity minus the smallest number of variables
// meeting the support of every minimal leading-term generator.
int krull_dimension(const Ideal& I, EffortMeter& meter);
int krull_dimension(const Ideal& I, const GBOptions& opts = {});

// Entry d = number of standard monomials of degree d, d = 0..max_degree.
// Generators must be homogeneous.
std::vector<std::uint64_t> hilbert_function(const Ideal& I, std::uint32_t max_degree,
                                            EffortMeter& meter);
std::vector<std::uint64_t> hilbert_function(const Ideal& I, std::uint32_t max_degree,
                                            const GBOptions& opts = {});

}  // namespace gaussian
