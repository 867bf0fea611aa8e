#include <cmath>
#include <vector>

#include "twisted/error.hpp"
#include "twisted/quadrature.hpp"

namespace twisted::aap {

namespace {

constexpr std::int64_t kBlock = 4096;

void check(double a, double b, std::int64_t panels) {
  require(std::isfinite(a) && std::isfinite(b) && a < b, "integration interval is empty");
  require(panels >= 1, "panel count must be at least 1");
}

Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

Complex midpoint_rule(const Integrand& g, double a, double b, std::int64_t panels) {
  check(a, b, panels);
  const double h = (b - a) / static_cast<double>(panels);
  const std::int64_t blocks = (panels + kBlock - 1) / kBlock;
  std::vector<Complex> partial(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(static)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::int64_t first = blk * kBlock;
    const std::int64_t last = std::min(panels, first + kBlock);
    Complex s;
    for (std::int64_t i = first; i < last; ++i)
      s += g(a + (static_cast<double>(i) + 0.5) * h);
    partial[static_cast<std::size_t>(blk)] = s;
  }
  return h * pairwise_sum(partial, 0, partial.size());
}

Complex midpoint_rule_serial(const Integrand& g, double a, double b, std::int64_t panels) {
  check(a, b, panels);
  const double h = (b - a) / static_cast<double>(panels);
  Complex s;
  for (std::int64_t i = 0; i < panels; ++i) s += g(a + (static_cast<double>(i) + 0.5) * h);
  return h * s;
}

std::int64_t recommended_panels(double T, double max_frequency) {
  require(T > 0.0, "T must be positive");
  return static_cast<std::int64_t>(std::ceil(T * (std::abs(max_frequency) + 1.0) * 4.0));
}

}  // namespace twisted::aap
