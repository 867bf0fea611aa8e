#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace twisted::zline {

// A subset of ℤ given by residue classes modulo m with finitely many
// exceptions. Always stored in canonical form: the modulus is the minimal
// period of the residue pattern, `added` holds only points outside the
// pattern and `removed` only points inside it, both sorted. Equal sets
// therefore compare equal structurally.
class PeriodicSet {
 public:
  PeriodicSet() = default;  // empty set
  // residues must lie in [0, modulus); exceptions are applied as
  //   k ∈ S  ⇔  (k mod m ∈ residues and k ∉ removed) or k ∈ added
  PeriodicSet(std::int64_t modulus, std::vector<std::int64_t> residues,
              std::vector<std::int64_t> added = {},
              std::vector<std::int64_t> removed = {});

  static PeriodicSet all() { return PeriodicSet(1, {0}); }
  static PeriodicSet finite(std::vector<std::int64_t> points);
  static PeriodicSet residue_class(std::int64_t modulus, std::int64_t residue);

  std::int64_t modulus() const { return modulus_; }
  std::vector<std::int64_t> residues() const;
  const std::vector<std::int64_t>& added() const { return added_; }
  const std::vector<std::int64_t>& removed() const { return removed_; }
  // Membership of the residue class of k, ignoring exceptions.
  bool pattern_contains(std::int64_t k) const;

  bool contains(std::int64_t k) const;
  bool is_empty() const { return is_finite() && added_.empty(); }
  bool is_finite() const;
  bool is_cofinite() const;
  // The members of a finite set, ascending. Throws InputError otherwise.
  const std::vector<std::int64_t>& elements() const;

  PeriodicSet complement() const;
  friend PeriodicSet operator|(const PeriodicSet& a, const PeriodicSet& b);
  friend PeriodicSet operator&(const PeriodicSet& a, const PeriodicSet& b);
  friend PeriodicSet operator-(const PeriodicSet& a, const PeriodicSet& b);
  bool is_subset_of(const PeriodicSet& other) const { return (*this - other).is_empty(); }

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  using Override = std::pair<std::int64_t, bool>;
  PeriodicSet(std::vector<bool> pattern, const std::vector<Override>& overrides);
  template <typename Op>
  static PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, Op op);

  std::int64_t modulus_ = 1;
  std::vector<bool> pattern_{false};
  std::vector<std::int64_t> added_;
  std::vector<std::int64_t> removed_;
};

// Non-negative remainder.
constexpr std::int64_t floor_mod(std::int64_t k, std::int64_t m) {
  const std::int64_t r = k % m;
  return r < 0 ? r + m : r;
}

}  // namespace twisted::zline
