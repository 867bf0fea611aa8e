#include "twisted/error.hpp"
#include "twisted/zline.hpp"

namespace twisted::zline {

PeriodicMap::PeriodicMap(FiniteTopology target, std::int64_t modulus,
                         std::vector<int> residue_values,
                         std::map<std::int64_t, int> exceptions)
    : target_(std::move(target)), modulus_(modulus), residue_values_(std::move(residue_values)) {
  require(modulus >= 1, "map modulus must be at least 1");
  require(residue_values_.size() == static_cast<std::size_t>(modulus),
          "map needs one value per residue class");
  require(target_.size() > 0, "no map from ℤ into an empty space");
  auto in_range = [&](int v) { return v >= 0 && v < target_.size(); };
  for (int v : residue_values_) require(in_range(v), "map value outside the target space");
  for (const auto& [k, v] : exceptions) {
    require(in_range(v), "exception value outside the target space");
    if (v != residue_values_[static_cast<std::size_t>(floor_mod(k, modulus_))])
      exceptions_.emplace(k, v);
  }
}

PeriodicMap PeriodicMap::constant(const FiniteTopology& target, int value) {
  return PeriodicMap(target, 1, {value});
}

int PeriodicMap::operator()(std::int64_t k) const {
  if (auto it = exceptions_.find(k); it != exceptions_.end()) return it->second;
  return residue_values_[static_cast<std::size_t>(floor_mod(k, modulus_))];
}

PointSet PeriodicMap::recurring_values(std::int64_t start, std::int64_t step) const {
  require(step >= 1, "progression step must be positive");
  PointSet out = 0;
  for (std::int64_t k = 0; k < modulus_; ++k)
    out |= fintop::singleton(
        residue_values_[static_cast<std::size_t>(floor_mod(start + k * step, modulus_))]);
  return out;
}

PeriodicSet preimage(const PeriodicMap& f, PointSet b) {
  std::vector<std::int64_t> residues;
  for (std::int64_t r = 0; r < f.modulus(); ++r)
    if (fintop::contains(b, f.residue_values()[static_cast<std::size_t>(r)]))
      residues.push_back(r);
  std::vector<std::int64_t> added;
  std::vector<std::int64_t> removed;
  for (const auto& [k, v] : f.exceptions())
    (fintop::contains(b, v) ? added : removed).push_back(k);
  return PeriodicSet(f.modulus(), std::move(residues), std::move(added), std::move(removed));
}

}  // namespace twisted::zline
