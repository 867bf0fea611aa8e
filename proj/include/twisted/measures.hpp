#pragma once

// Finite Borel measures on twisted sums. Since both sum topologies generate
// the same Borel algebra B(Y) ⊕ B(Z), every finite measure on Y ⊔ Z is a
// direct sum μ₁ ⊕ μ₂ with (μ₁ ⊕ μ₂)(A ⊔ B) = μ₁(A) + μ₂(B).

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "twisted/aap.hpp"
#include "twisted/error.hpp"
#include "twisted/fintop.hpp"
#include "twisted/zline.hpp"

namespace twisted::measures {

template <typename Point>
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::map<Point, double> atoms) {
    for (const auto& [p, w] : atoms) add(p, w);
  }

  void add(const Point& p, double weight) {
    require(std::isfinite(weight) && weight >= 0.0, "atom weights must be finite and >= 0");
    if (weight > 0.0) atoms_[p] += weight;
  }

  const std::map<Point, double>& atoms() const { return atoms_; }
  double mass() const {
    double m = 0.0;
    for (const auto& [p, w] : atoms_) m += w;
    return m;
  }
  // Sum of the weights of atoms satisfying pred, in atom order.
  template <typename Pred>
  double measure(Pred&& pred) const {
    double m = 0.0;
    for (const auto& [p, w] : atoms_)
      if (pred(p)) m += w;
    return m;
  }

  friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

 private:
  std::map<Point, double> atoms_;
};

// Haar measure on 𝕋^d with weight haar_weight (normalized: weight 1, no
// atoms), plus point masses at torus points.
struct TorusMeasure {
  double haar_weight = 0.0;
  AtomicMeasure<std::vector<double>> atoms;
  double mass() const { return haar_weight + atoms.mass(); }
  friend bool operator==(const TorusMeasure&, const TorusMeasure&) = default;
};

template <typename YMeasure, typename ZMeasure>
struct SumMeasure {
  YMeasure mu_y;
  ZMeasure mu_z;
  double mass() const { return mu_y.mass() + mu_z.mass(); }
  friend bool operator==(const SumMeasure&, const SumMeasure&) = default;
};

template <typename YMeasure, typename ZMeasure>
std::pair<YMeasure, ZMeasure> decompose_measure(const SumMeasure<YMeasure, ZMeasure>& m) {
  return {m.mu_y, m.mu_z};
}

// -- finite model: Y and Z finite spaces, sets are sum-indexed masks ---------

using FiniteSumMeasure = SumMeasure<AtomicMeasure<int>, AtomicMeasure<int>>;

double measure_of(const FiniteSumMeasure& m, const fintop::SumSpace& space,
                  fintop::PointSet s);

// A set function on the Borel algebra of a finite sum, listed member by
// member.
using AlgebraMeasure = std::map<fintop::PointSet, double>;

// The measure on `algebra` giving each atom of the algebra its weight.
AlgebraMeasure measure_from_atoms(const std::vector<fintop::PointSet>& algebra,
                                  const std::vector<double>& atom_weights);

struct FiniteDecomposition {
  AlgebraMeasure mu_y;  // on B(Y), Y-indexed
  AlgebraMeasure mu_z;  // on B(Z), Z-indexed
  // μ(A ⊔ B) == μ_y(A) + μ_z(B) on every member of the algebra.
  bool recombines = false;
  std::optional<fintop::PointSet> witness;  // first member where it fails
};

// Restricts μ to the Y- and Z-blocks. μ must be defined on every member of
// borel_algebra(space); throws InputError otherwise.
FiniteDecomposition decompose_measure(const fintop::SumSpace& space, const AlgebraMeasure& mu);

// (μ_y ⊕ μ_z) on the product algebra of the two blocks.
AlgebraMeasure recombine(const fintop::SumSpace& space, const AlgebraMeasure& mu_y,
                         const AlgebraMeasure& mu_z);

// -- ℤ model ----------------------------------------------------------------

using ZLineSumMeasure = SumMeasure<AtomicMeasure<std::int64_t>, AtomicMeasure<int>>;

double measure_of(const ZLineSumMeasure& m, const zline::ZSumSet& s);

struct InnerRegularityReport {
  double measure = 0.0;
  // μ of the exhibited compact subset F ⊔ zpart, F the atoms inside ypart.
  double compact_measure = 0.0;
  zline::ZSumSet compact_witness;
  bool witness_compact = false;
  bool witness_inside = false;
  bool ok() const { return witness_compact && witness_inside && compact_measure == measure; }
};

InnerRegularityReport inner_regularity_check(const ZLineSumMeasure& m,
                                             const zline::TwistedZ& carrier,
                                             const zline::ZSumSet& s);

// -- AAP model: Y = ℝ with atoms, Z = 𝕋^d -----------------------------------

using AapSumMeasure = SumMeasure<AtomicMeasure<double>, TorusMeasure>;

// Finite union of open intervals ⊔ finite union of pairwise disjoint boxes.
struct AapSet {
  std::vector<aap::OpenInterval> intervals;
  std::vector<std::vector<aap::Arc>> boxes;
};

// Normalized Haar measure of a box: Π arc lengths / (2π)^d.
double haar_box(const std::vector<aap::Arc>& box);

// Throws InputError when boxes overlap or do not match `dimension`.
double measure_of(const AapSumMeasure& m, const AapSet& s, std::size_t dimension);

// ∫ f₁ dHaar over the Bohr torus: the constant coefficient, exactly.
aap::Complex haar_integral(const aap::TrigPolynomial& f1);

// (f₁ · s)(t) = f₁(t + s): c_k ↦ c_k exp(i⟨k,λ⟩s). The constant
// coefficient is left untouched.
aap::TrigPolynomial translation_action(const aap::TrigPolynomial& f1, double s);

}  // namespace twisted::measures
