#pragma once

#include <optional>
#include <span>

#include "twisted/aap.hpp"

namespace twisted::aap {

// Finds t with |t| <= t_max whose image natural_map(t) lies within eps of
// theta in every coordinate, or nullopt.
//
// The first coordinate is pinned exactly: candidates are
//   t_n = θ₁/λ₁ + 2πn/λ₁,   n = 0, 1, -1, 2, -2, ...
// and the first candidate in this order that passes is returned. For d = 1
// that is t = θ₁/λ₁ itself. The OpenMP kernel scans blocks of candidates
// concurrently but always reports the earliest hit, so it agrees with the
// serial scan.
std::optional<double> kronecker_search(const FrequencyBasis& basis,
                                       std::span<const double> theta, double eps,
                                       double t_max);
std::optional<double> kronecker_search_serial(const FrequencyBasis& basis,
                                              std::span<const double> theta, double eps,
                                              double t_max);

}  // namespace twisted::aap
