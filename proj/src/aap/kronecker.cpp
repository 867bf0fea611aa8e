#include <cmath>
#include <limits>
#include <vector>

#include "twisted/error.hpp"
#include "twisted/kronecker.hpp"

namespace twisted::aap {

namespace {

constexpr std::int64_t kBlock = 1 << 14;
constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

struct Search {
  const FrequencyBasis& basis;
  std::vector<double> theta;
  double eps;
  double t_max;
  double base;    // θ₁/λ₁
  double step;    // 2π/λ₁
  std::int64_t positions;  // number of search positions to visit

  // Position j visits n = 0, 1, -1, 2, -2, ...
  static std::int64_t offset(std::int64_t j) { return (j % 2 == 1) ? (j + 1) / 2 : -(j / 2); }

  double candidate(std::int64_t j) const {
    return base + static_cast<double>(offset(j)) * step;
  }

  bool hits(std::int64_t j) const {
    const double t = candidate(j);
    if (std::abs(t) > t_max) return false;
    const auto image = natural_map(basis, t);
    for (std::size_t c = 0; c < theta.size(); ++c)
      if (angular_distance(image.theta[c], theta[c]) >= eps) return false;
    return true;
  }
};

Search prepare(const FrequencyBasis& basis, std::span<const double> theta, double eps,
               double t_max) {
  require(theta.size() == basis.dimension(), "target dimension does not match the basis");
  require(eps > 0.0, "eps must be positive");
  require(t_max > 0.0, "t_max must be positive");
  std::vector<double> target(theta.begin(), theta.end());
  for (double& a : target) a = reduce_angle(a);
  const double lambda = basis.lambda()[0];
  const double base = target[0] / lambda;
  const double step = kTwoPi / lambda;
  // |n| up to (t_max + |base|)/step on each side, interleaved.
  const double reach = std::floor((t_max + std::abs(base)) / step) + 1.0;
  require(reach < 4.0e15, "t_max too large for the search order");
  const auto positions = static_cast<std::int64_t>(2.0 * reach + 1.0);
  return Search{basis, std::move(target), eps, t_max, base, step, positions};
}

}  // namespace

std::optional<double> kronecker_search(const FrequencyBasis& basis,
                                       std::span<const double> theta, double eps,
                                       double t_max) {
  const Search s = prepare(basis, theta, eps, t_max);
  const std::int64_t blocks = (s.positions + kBlock - 1) / kBlock;
  // Blocks are scanned a round at a time; within a round each block reports
  // its first hit, and the earliest block with a hit wins.
  const std::int64_t round = 64;
  for (std::int64_t first_block = 0; first_block < blocks; first_block += round) {
    const std::int64_t last_block = std::min(blocks, first_block + round);
    std::vector<std::int64_t> first_hit(static_cast<std::size_t>(last_block - first_block), kNone);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = first_block; b < last_block; ++b) {
      const std::int64_t lo = b * kBlock;
      const std::int64_t hi = std::min(s.positions, lo + kBlock);
      for (std::int64_t j = lo; j < hi; ++j) {
        if (s.hits(j)) {
          first_hit[static_cast<std::size_t>(b - first_block)] = j;
          break;
        }
      }
    }
    for (std::int64_t j : first_hit)
      if (j != kNone) return s.candidate(j);
  }
  return std::nullopt;
}

std::optional<double> kronecker_search_serial(const FrequencyBasis& basis,
                                              std::span<const double> theta, double eps,
                                              double t_max) {
  const Search s = prepare(basis, theta, eps, t_max);
  for (std::int64_t j = 0; j < s.positions; ++j)
    if (s.hits(j)) return s.candidate(j);
  return std::nullopt;
}

}  // namespace twisted::aap
