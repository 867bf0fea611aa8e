#pragma once

#include <cstdint>
#include <functional>

#include "twisted/aap.hpp"

namespace twisted::aap {

using Integrand = std::function<Complex(double)>;

// Composite midpoint rule h·Σ g(a + (i + 1/2)h), h = (b - a)/panels.
//
// Panels are grouped in fixed blocks; each block is summed left to right
// and the block sums are combined pairwise. The grouping does not depend on
// the thread count, so results are bit-identical across runs and machines
// with the same floating-point semantics. g must be safe to call
// concurrently.
Complex midpoint_rule(const Integrand& g, double a, double b, std::int64_t panels);

// Plain left-to-right reference used to validate the kernel.
Complex midpoint_rule_serial(const Integrand& g, double a, double b, std::int64_t panels);

// Panel count keeping the midpoint error of every frequency in
// [-max_frequency, max_frequency] within about 1% of its truncation term:
// T·(max_frequency + 1)·4.
std::int64_t recommended_panels(double T, double max_frequency);

}  // namespace twisted::aap
