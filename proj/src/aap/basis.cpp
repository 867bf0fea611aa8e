#include <algorithm>
#include <cmath>
#include <sstream>

#include "twisted/aap.hpp"
#include "twisted/error.hpp"

namespace twisted::aap {

namespace {

// Cap on the relation screen's search box; larger dimensions get a smaller
// coefficient bound instead of an unbounded enumeration.
constexpr double kMaxScreened = 4.0e6;

std::string describe(const FrequencyIndex& k) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < k.size(); ++j) os << (j ? "," : "") << k[j];
  os << ')';
  return os.str();
}

}  // namespace

std::vector<FrequencyIndex> index_box(std::size_t dimension, int bound) {
  require(bound >= 0, "support bound must be non-negative");
  std::vector<FrequencyIndex> out;
  FrequencyIndex k(dimension, -bound);
  while (true) {
    out.push_back(k);
    std::size_t j = dimension;
    while (true) {
      if (j == 0) return out;
      --j;
      if (k[j] < bound) {
        ++k[j];
        break;
      }
      k[j] = -bound;
    }
  }
}

FrequencyBasis::FrequencyBasis(std::vector<double> lambda, RelationScreen screen)
    : lambda_(std::move(lambda)) {
  require(!lambda_.empty(), "frequency basis needs at least one generator");
  for (std::size_t j = 0; j < lambda_.size(); ++j) {
    require(std::isfinite(lambda_[j]) && lambda_[j] > 0.0, "frequencies must be positive");
    require(j == 0 || lambda_[j] > lambda_[j - 1], "frequencies must be strictly increasing");
  }
  int bound = screen.max_coefficient;
  while (bound > 1 &&
         std::pow(2.0 * bound + 1.0, static_cast<double>(lambda_.size())) > kMaxScreened)
    --bound;
  for (const auto& k : index_box(lambda_.size(), bound)) {
    // One representative per ±k pair: first nonzero coordinate positive.
    auto first = std::find_if(k.begin(), k.end(), [](int c) { return c != 0; });
    if (first == k.end() || *first < 0) continue;
    if (std::abs(frequency(k)) < screen.tolerance)
      throw InputError("generators satisfy the integer relation k = " + describe(k));
  }
}

double FrequencyBasis::frequency(std::span<const int> k) const {
  require(k.size() == lambda_.size(), "frequency index has the wrong dimension");
  double w = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) w += k[j] * lambda_[j];
  return w;
}

}  // namespace twisted::aap
