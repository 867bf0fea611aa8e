#include <algorithm>
#include <numeric>

#include "twisted/error.hpp"
#include "twisted/periodic_set.hpp"

namespace twisted::zline {

namespace {

// Working moduli grow as least common multiples; past this the residue
// tables stop being a desk-scale object.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 20;

std::int64_t minimal_period(const std::vector<bool>& pattern) {
  const auto m = static_cast<std::int64_t>(pattern.size());
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool periodic = true;
    for (std::int64_t i = d; i < m && periodic; ++i)
      periodic = pattern[static_cast<std::size_t>(i)] == pattern[static_cast<std::size_t>(i % d)];
    if (periodic) return d;
  }
  return m;
}

}  // namespace

PeriodicSet::PeriodicSet(std::vector<bool> pattern,
                         const std::vector<Override>& overrides) {
  require(!pattern.empty(), "modulus must be at least 1");
  const std::int64_t period = minimal_period(pattern);
  pattern.resize(static_cast<std::size_t>(period));
  modulus_ = period;
  pattern_ = std::move(pattern);
  for (const auto& [k, member] : overrides) {
    const bool in_pattern = pattern_contains(k);
    if (member && !in_pattern) added_.push_back(k);
    if (!member && in_pattern) removed_.push_back(k);
  }
  for (auto* v : {&added_, &removed_}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
}

PeriodicSet::PeriodicSet(std::int64_t modulus, std::vector<std::int64_t> residues,
                         std::vector<std::int64_t> added,
                         std::vector<std::int64_t> removed) {
  require(modulus >= 1, "modulus must be at least 1");
  require(modulus <= kMaxModulus, "modulus too large");
  std::vector<bool> pattern(static_cast<std::size_t>(modulus), false);
  for (std::int64_t r : residues) {
    require(r >= 0 && r < modulus, "residue outside [0, modulus)");
    pattern[static_cast<std::size_t>(r)] = true;
  }
  std::vector<Override> overrides;
  for (std::int64_t k : removed) overrides.emplace_back(k, false);
  for (std::int64_t k : added) overrides.emplace_back(k, true);
  // An added point wins over a removal of the same point.
  std::vector<Override> resolved;
  for (const auto& [k, member] : overrides) {
    auto it = std::find_if(resolved.begin(), resolved.end(),
                           [k](const Override& o) { return o.first == k; });
    if (it == resolved.end())
      resolved.emplace_back(k, member);
    else
      it->second = it->second || member;
  }
  *this = PeriodicSet(std::move(pattern), resolved);
}

PeriodicSet PeriodicSet::finite(std::vector<std::int64_t> points) {
  return PeriodicSet(1, {}, std::move(points));
}

PeriodicSet PeriodicSet::residue_class(std::int64_t modulus, std::int64_t residue) {
  require(modulus >= 1, "modulus must be at least 1");
  return PeriodicSet(modulus, {floor_mod(residue, modulus)});
}

std::vector<std::int64_t> PeriodicSet::residues() const {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < modulus_; ++r)
    if (pattern_[static_cast<std::size_t>(r)]) out.push_back(r);
  return out;
}

bool PeriodicSet::pattern_contains(std::int64_t k) const {
  return pattern_[static_cast<std::size_t>(floor_mod(k, modulus_))];
}

bool PeriodicSet::contains(std::int64_t k) const {
  if (std::binary_search(added_.begin(), added_.end(), k)) return true;
  return pattern_contains(k) && !std::binary_search(removed_.begin(), removed_.end(), k);
}

bool PeriodicSet::is_finite() const {
  return std::none_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; });
}

bool PeriodicSet::is_cofinite() const {
  return std::all_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; });
}

const std::vector<std::int64_t>& PeriodicSet::elements() const {
  require(is_finite(), "elements() requested for an infinite periodic set");
  return added_;
}

template <typename Op>
PeriodicSet PeriodicSet::combine(const PeriodicSet& a, const PeriodicSet& b, Op op) {
  const std::int64_t l = std::lcm(a.modulus_, b.modulus_);
  require(l <= kMaxModulus, "combined modulus too large");
  std::vector<bool> pattern(static_cast<std::size_t>(l));
  for (std::int64_t r = 0; r < l; ++r)
    pattern[static_cast<std::size_t>(r)] = op(a.pattern_contains(r), b.pattern_contains(r));
  std::vector<Override> overrides;
  for (const auto* v : {&a.added_, &a.removed_, &b.added_, &b.removed_})
    for (std::int64_t k : *v) overrides.emplace_back(k, op(a.contains(k), b.contains(k)));
  return PeriodicSet(std::move(pattern), overrides);
}

PeriodicSet PeriodicSet::complement() const {
  std::vector<bool> pattern(pattern_.size());
  for (std::size_t r = 0; r < pattern_.size(); ++r) pattern[r] = !pattern_[r];
  std::vector<Override> overrides;
  for (std::int64_t k : added_) overrides.emplace_back(k, false);
  for (std::int64_t k : removed_) overrides.emplace_back(k, true);
  return PeriodicSet(std::move(pattern), overrides);
}

PeriodicSet operator|(const PeriodicSet& a, const PeriodicSet& b) {
  return PeriodicSet::combine(a, b, [](bool x, bool y) { return x || y; });
}

PeriodicSet operator&(const PeriodicSet& a, const PeriodicSet& b) {
  return PeriodicSet::combine(a, b, [](bool x, bool y) { return x && y; });
}

PeriodicSet operator-(const PeriodicSet& a, const PeriodicSet& b) {
  return PeriodicSet::combine(a, b, [](bool x, bool y) { return x && !y; });
}

}  // namespace twisted::zline
