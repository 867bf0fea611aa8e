#pragma once

// The twisted sum ℤ ⊔_f Z of the discrete integers with a finite space Z
// along an eventually periodic map f : ℤ → Z.
//
// In discrete ℤ the compact sets are exactly the finite ones, so the basis
// elements around a point φ ∈ Z are (f⁻¹(W) \ K) ⊔ W with W ∋ φ open and K
// finite. Every decision below reduces to a finiteness question about a
// PeriodicSet built from f⁻¹(U_φ), U_φ the minimal neighborhood of φ, and
// each one hands back the certificate it rests on.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twisted/fintop.hpp"
#include "twisted/periodic_set.hpp"

namespace twisted::zline {

using fintop::FiniteTopology;
using fintop::PointSet;

class PeriodicMap {
 public:
  // residue_values[r] is f(k) for k ≡ r (mod modulus) unless k is an
  // exception. Values index points of target.
  PeriodicMap(FiniteTopology target, std::int64_t modulus,
              std::vector<int> residue_values,
              std::map<std::int64_t, int> exceptions = {});

  static PeriodicMap constant(const FiniteTopology& target, int value);

  const FiniteTopology& target() const { return target_; }
  std::int64_t modulus() const { return modulus_; }
  const std::vector<int>& residue_values() const { return residue_values_; }
  // Only exceptions that differ from the residue value are kept.
  const std::map<std::int64_t, int>& exceptions() const { return exceptions_; }

  int operator()(std::int64_t k) const;

  // Values f takes infinitely often along a + k·d, k → ∞.
  PointSet recurring_values(std::int64_t start, std::int64_t step) const;

 private:
  FiniteTopology target_;
  std::int64_t modulus_;
  std::vector<int> residue_values_;
  std::map<std::int64_t, int> exceptions_;
};

// Exact preimage of a subset of Z.
PeriodicSet preimage(const PeriodicMap& f, PointSet b);

class TwistedZ {
 public:
  explicit TwistedZ(PeriodicMap f) : z_(f.target()), f_(std::move(f)) {}
  // ℤ ⊔ ∅: no map exists, the sum is just discrete ℤ.
  static TwistedZ without_boundary() { return TwistedZ(); }

  const FiniteTopology& z() const { return z_; }
  const std::optional<PeriodicMap>& map() const { return f_; }
  // Optional display names for the Z-points.
  std::vector<std::string> labels;

  PeriodicSet preimage(PointSet b) const;
  PointSet z_full() const { return z_.full(); }

 private:
  TwistedZ() : z_(FiniteTopology::indiscrete(0)) {}
  FiniteTopology z_;
  std::optional<PeriodicMap> f_;
};

// Z = {∞}, f constant: the one-point compactification of ℤ.
TwistedZ one_point_model();

struct ZSumSet {
  PeriodicSet ypart;
  PointSet zpart = 0;
  friend bool operator==(const ZSumSet&, const ZSumSet&) = default;
};

ZSumSet complement(const TwistedZ& t, const ZSumSet& s);
ZSumSet unite(const ZSumSet& a, const ZSumSet& b);
ZSumSet intersect(const ZSumSet& a, const ZSumSet& b);
bool is_subset(const ZSumSet& a, const ZSumSet& b);

struct ZBasisElement {
  enum class Kind { type1, type23 };
  Kind kind = Kind::type1;
  PeriodicSet ypart;                 // the element's ℤ-part
  PointSet w = 0;                    // W (type 23)
  std::vector<std::int64_t> removed; // the finite compactum K (type 23)
};

// Checks that e really is a type-1 set or (f⁻¹(W) \ K) ⊔ W with W open and K
// finite, independently of how it was produced.
bool is_basis_element(const TwistedZ& t, const ZBasisElement& e);
ZSumSet union_of(const std::vector<ZBasisElement>& parts);

struct OpenVerdict {
  bool open = false;
  // When open: basis elements whose union is exactly the queried set.
  std::vector<ZBasisElement> decomposition;
  // When not open: the offending Z-point and, if Z-part is open, the
  // infinite set f⁻¹(U_φ) \ ypart.
  std::optional<int> witness_point;
  std::optional<PeriodicSet> witness_defect;
  std::string reason;
};

OpenVerdict is_open(const TwistedZ& t, const ZSumSet& s);
bool is_closed(const TwistedZ& t, const ZSumSet& s);
ZSumSet closure(const TwistedZ& t, const ZSumSet& s);
ZSumSet interior(const TwistedZ& t, const ZSumSet& s);

struct CompactVerdict {
  bool compact = false;
  // ypart minus the preimage of the Z-windows; infinite iff not compact.
  PeriodicSet uncovered;
};

CompactVerdict is_compact(const TwistedZ& t, const ZSumSet& s);

// Discrete ℤ is locally compact Hausdorff, so this is "Z is Hausdorff".
bool is_hausdorff(const TwistedZ& t);

struct CoincideReport {
  bool direct_opens_twisted = false;  // (1): every ∅ ⊔ W, W open, is open
  bool z_block_open = false;          // (5)
  bool nicely_covered = false;        // (6): cover by W with finite f⁻¹(W)
  bool agree() const {
    return direct_opens_twisted == z_block_open && z_block_open == nicely_covered;
  }
  bool coincide() const { return direct_opens_twisted; }
};

// Evaluates the three equivalent statements independently. Throws
// InvariantError if they disagree.
CoincideReport sums_coincide(const TwistedZ& t);

struct LimitReport {
  PointSet recurring_values = 0;  // values f takes infinitely often
  PointSet limit_set = 0;
  std::optional<int> converges;
};

// Limits of the progression start + k·step (step >= 1) as k → ∞. An
// injective sequence leaves every finite set, so only Z-points can be limits.
LimitReport limit_points(const TwistedZ& t, std::int64_t start, std::int64_t step);

}  // namespace twisted::zline
