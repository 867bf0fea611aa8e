#pragma once

// Topologies on finite ground sets and their twisted/direct sums.
//
// Points of a space with n points are the indices 0..n-1; subsets are bit
// masks. In a sum space the Y-points keep their indices and Z-point k becomes
// index n_Y + k.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twisted::fintop {

using PointSet = std::uint32_t;

// Bound on the ground set of any single topology, sums included. Families of
// opens are enumerated exhaustively, so this keeps them at most 2^12 long.
inline constexpr int kMaxPoints = 12;

constexpr PointSet full_set(int n) {
  return n == 0 ? PointSet{0} : (~PointSet{0}) >> (32 - n);
}
constexpr PointSet singleton(int p) { return PointSet{1} << p; }
constexpr bool contains(PointSet s, int p) { return (s >> p) & 1u; }
constexpr bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }
constexpr int cardinality(PointSet s) { return std::popcount(s); }

std::vector<int> members(PointSet s);

class FiniteTopology {
 public:
  // Validates the topology axioms; throws InputError if they fail.
  FiniteTopology(int n, std::vector<PointSet> opens);

  // Smallest topology containing the subbasis (plus the empty and the full
  // set). Members outside 0..n-1 are rejected.
  static FiniteTopology from_subbasis(int n, std::span<const PointSet> subbasis);
  static FiniteTopology discrete(int n);
  static FiniteTopology indiscrete(int n);

  int size() const { return n_; }
  PointSet full() const { return full_set(n_); }
  // Sorted ascending by mask value.
  const std::vector<PointSet>& opens() const { return opens_; }

  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(full() & ~s); }

  // Intersection of all opens containing p; itself open.
  PointSet minimal_neighborhood(int p) const;
  PointSet closure(PointSet s) const;
  PointSet interior(PointSet s) const;

  // For finite spaces this is equivalent to being discrete.
  bool is_hausdorff() const;
  bool is_discrete() const { return opens_.size() == (std::size_t{1} << n_); }

  // {U ∩ part : U open}, re-indexed so that the lowest member of `part`
  // becomes point 0.
  std::vector<PointSet> relative_opens(PointSet part) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

 private:
  struct Trusted {};
  FiniteTopology(Trusted, int n, std::vector<PointSet> opens);
  void index_neighborhoods();

  int n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> min_nbhd_;
};

// Every subset of a finite space is compact. Kept as a named predicate so
// the diagram code reads like the general statements it instantiates.
inline bool is_compact(const FiniteTopology&, PointSet) { return true; }

// Product topology generated by the rectangles U x V; point (i, j) has index
// i * b.size() + j.
FiniteTopology product(const FiniteTopology& a, const FiniteTopology& b);

class ContinuousFiniteMap {
 public:
  // Throws InputError unless values is total and every open preimage is open.
  ContinuousFiniteMap(FiniteTopology source, FiniteTopology target,
                      std::vector<int> values);

  static ContinuousFiniteMap identity(const FiniteTopology& t);
  static ContinuousFiniteMap constant(const FiniteTopology& source,
                                      const FiniteTopology& target, int value);
  // (i, j) -> i on product(z, z).
  static ContinuousFiniteMap first_projection(const FiniteTopology& z);

  const FiniteTopology& source() const { return source_; }
  const FiniteTopology& target() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int p) const { return values_[static_cast<std::size_t>(p)]; }

  PointSet preimage(PointSet w) const;
  PointSet image() const;

 private:
  FiniteTopology source_;
  FiniteTopology target_;
  std::vector<int> values_;
};

enum class SumFlavor { twisted, direct };

class SumSpace {
 public:
  const FiniteTopology& y() const { return y_; }
  const FiniteTopology& z() const { return z_; }
  const FiniteTopology& topology() const { return topology_; }
  SumFlavor flavor() const { return flavor_; }
  // Present for twisted sums.
  const std::optional<ContinuousFiniteMap>& map() const { return map_; }

  int offset() const { return y_.size(); }
  PointSet y_block() const { return y_.full(); }
  PointSet z_block() const { return z_.full() << offset(); }
  PointSet embed(PointSet ypart, PointSet zpart) const {
    return ypart | (zpart << offset());
  }
  PointSet y_part(PointSet s) const { return s & y_block(); }
  PointSet z_part(PointSet s) const { return (s & z_block()) >> offset(); }

 private:
  friend SumSpace twisted_sum(const FiniteTopology&, const FiniteTopology&,
                              const ContinuousFiniteMap&);
  friend SumSpace direct_sum(const FiniteTopology&, const FiniteTopology&);
  SumSpace(FiniteTopology y, FiniteTopology z, FiniteTopology topology,
           SumFlavor flavor, std::optional<ContinuousFiniteMap> map);

  FiniteTopology y_;
  FiniteTopology z_;
  FiniteTopology topology_;
  SumFlavor flavor_;
  std::optional<ContinuousFiniteMap> map_;
};

// Topology generated by the standard sets
//   type 1: V ⊔ ∅           (V open in y)
//   type 2: ∁K ⊔ Z          (K compact closed in y; here: any closed K)
//   type 3: f⁻¹(W) ⊔ W      (W open in z)
// Throws InputError if f does not map y to z or the sum exceeds kMaxPoints.
SumSpace twisted_sum(const FiniteTopology& y, const FiniteTopology& z,
                     const ContinuousFiniteMap& f);
SumSpace direct_sum(const FiniteTopology& y, const FiniteTopology& z);

struct BasisElement {
  enum class Kind { type1, type23 };
  Kind kind;
  PointSet y_open;  // V for type 1, ∁K for type 23
  PointSet w;       // W for type 23, empty for type 1
  PointSet set;     // the element itself, in sum indexing
};

// All type-1 and type-23 sets of a twisted sum, deduplicated by `set`.
std::vector<BasisElement> standard_basis(const SumSpace& s);

// Expresses an open set as a union of basis elements. Returns nullopt iff
// u is not open (or s is not a twisted sum).
std::optional<std::vector<BasisElement>> basis_decomposition(const SumSpace& s,
                                                             PointSet u);

// Algebra generated by the opens; on finite sets this is the Borel algebra.
// Sorted ascending.
std::vector<PointSet> borel_algebra(const FiniteTopology& t);
std::vector<PointSet> borel_algebra(const SumSpace& s);
// {A ⊔ B : A ∈ B(y), B ∈ B(z)}, sorted.
std::vector<PointSet> product_algebra(const FiniteTopology& y,
                                      const FiniteTopology& z);
// Minimal nonempty members of an algebra (its atoms).
std::vector<PointSet> algebra_atoms(const std::vector<PointSet>& algebra);

// -- the six-statement comparison of the two sum topologies ----------------

struct Implication {
  std::string name;
  bool applicable = true;  // false when a side hypothesis does not hold
  bool holds = true;
};

struct DiagramReport {
  bool sums_coincide = false;     // (1)
  bool y_compact = false;         // (2)
  bool y_locally_compact = false; // (3)
  bool image_closed = false;      // (4)
  bool z_block_open = false;      // (5)
  bool z_nicely_covered = false;  // (6)
  bool z_hausdorff = false;
  std::vector<Implication> implications;

  bool consistent() const;
};

// (6) decided from the cover by minimal neighborhoods.
bool nicely_covered(const ContinuousFiniteMap& f);
// (6) decided by searching every subfamily of z.opens that covers Z.
bool nicely_covered_exhaustive(const ContinuousFiniteMap& f);

DiagramReport check_diagram(const FiniteTopology& y, const FiniteTopology& z,
                            const ContinuousFiniteMap& f);

// -- exhaustive enumeration -------------------------------------------------

// All topologies on n points, sorted by their opens family.
std::vector<FiniteTopology> all_topologies(int n);
std::vector<ContinuousFiniteMap> all_continuous_maps(const FiniteTopology& y,
                                                     const FiniteTopology& z);

struct InstanceFailure {
  std::size_t index = 0;
  std::string property;
  FiniteTopology y = FiniteTopology::indiscrete(0);
  FiniteTopology z = FiniteTopology::indiscrete(0);
  std::vector<int> values;
};

struct SweepReport {
  std::size_t instances = 0;
  std::size_t discrete_z_instances = 0;
  std::size_t opens_decomposed = 0;
  std::vector<InstanceFailure> failures;

  bool ok() const { return failures.empty(); }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

inline bool operator==(const InstanceFailure& a, const InstanceFailure& b) {
  return a.index == b.index && a.property == b.property && a.y == b.y &&
         a.z == b.z && a.values == b.values;
}

// Checks every lemma of the twisted-sum theory plus the Borel-algebra
// equality on all (y, z, f) with |Y| <= max_y, |Z| <= max_z. The OpenMP
// kernel and the serial reference report identically ordered results.
SweepReport sweep(int max_y, int max_z);
SweepReport sweep_serial(int max_y, int max_z);

}  // namespace twisted::fintop
