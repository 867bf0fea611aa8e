#pragma once

// Asymptotically almost periodic functions on ℝ over a finitely generated
// frequency module, and their spectrum ℝ ⊔ 𝕋^d.
//
// An element a = a₀ + a₁ pairs a finite tent sum a₀ ∈ C₀(ℝ) with a
// trigonometric polynomial a₁(t) = Σ c_k exp(i⟨k,λ⟩t). A spectrum point is
// either a real number t (the character a ↦ a(t)) or a torus point θ (the
// character a ↦ Σ c_k exp(i⟨k,θ⟩), which annihilates a₀).

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace twisted::aap {

using Complex = std::complex<double>;
using FrequencyIndex = std::vector<int>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Bounded screen for integer relations among the generators: construction
// fails if |Σ kⱼλⱼ| < tolerance for some 0 ≠ k with |k|∞ <= max_coefficient.
struct RelationScreen {
  int max_coefficient = 10;
  double tolerance = 1e-9;
};

class FrequencyBasis {
 public:
  explicit FrequencyBasis(std::vector<double> lambda, RelationScreen screen = {});

  std::size_t dimension() const { return lambda_.size(); }
  const std::vector<double>& lambda() const { return lambda_; }
  double frequency(std::span<const int> k) const;  // ⟨k, λ⟩

  friend bool operator==(const FrequencyBasis& a, const FrequencyBasis& b) {
    return a.lambda_ == b.lambda_;
  }

 private:
  std::vector<double> lambda_;
};

// All k with |k|∞ <= bound, in lexicographic order.
std::vector<FrequencyIndex> index_box(std::size_t dimension, int bound);

class TrigPolynomial {
 public:
  explicit TrigPolynomial(FrequencyBasis basis,
                          std::map<FrequencyIndex, Complex> coefficients = {});

  static TrigPolynomial constant(const FrequencyBasis& basis, Complex c);
  static TrigPolynomial exponential(const FrequencyBasis& basis, FrequencyIndex k,
                                    Complex c = 1.0);

  const FrequencyBasis& basis() const { return basis_; }
  // Zero coefficients are never stored.
  const std::map<FrequencyIndex, Complex>& coefficients() const { return coeffs_; }
  Complex coefficient(const FrequencyIndex& k) const;
  // Σ c_k over all k with ⟨k,λ⟩ = mu (within a relative 1e-12).
  Complex coefficient_at(double mu) const;

  Complex operator()(double t) const;
  Complex on_torus(std::span<const double> theta) const;

  double coefficient_l1() const;     // Σ|c_k|, bounds the sup norm
  double torus_lipschitz() const;    // Σ|c_k|·|k|₁, Lipschitz constant on 𝕋^d in max-angle metric
  double max_frequency() const;      // max |⟨k,λ⟩| over the support
  bool is_real_valued(double tol = 0.0) const;

  TrigPolynomial operator+(const TrigPolynomial& other) const;
  TrigPolynomial operator*(Complex s) const;

  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

 private:
  FrequencyBasis basis_;
  std::map<FrequencyIndex, Complex> coeffs_;
};

// Coefficient convolution (f·g)_k = Σ_{a+b=k} f_a g_b.
TrigPolynomial ap_product(const TrigPolynomial& f, const TrigPolynomial& g);

struct Tent {
  double center = 0.0;
  double halfwidth = 1.0;
  Complex amplitude = 1.0;
};

// Σ amplitude·max(0, 1 - |t - center| / halfwidth).
class BumpFunction {
 public:
  BumpFunction() = default;
  explicit BumpFunction(std::vector<Tent> tents);

  const std::vector<Tent>& tents() const { return tents_; }
  bool empty() const { return tents_.empty(); }

  Complex operator()(double t) const;
  // Exact: |·| of a piecewise affine complex function peaks at a breakpoint.
  double sup_norm() const;
  // Σ|amplitude|·halfwidth, an upper bound for the L¹ norm.
  double mass() const;
  Complex integral() const;
  Complex integral(double a, double b) const;

 private:
  std::vector<Tent> tents_;
};

struct AAPFunction {
  BumpFunction c0;
  TrigPolynomial ap;

  const FrequencyBasis& basis() const { return ap.basis(); }
  Complex operator()(double t) const { return c0(t) + ap(t); }
};

Complex evaluate(const AAPFunction& f, double t);

// -- spectrum ---------------------------------------------------------------

struct RealPoint {
  double t = 0.0;
};

// Angles always lie in [0, 2π).
struct TorusPoint {
  std::vector<double> theta;
};

using SpectrumPoint = std::variant<RealPoint, TorusPoint>;

double reduce_angle(double a);
TorusPoint torus_point(std::vector<double> angles);
// min(|a - b|, 2π - |a - b|) after reduction.
double angular_distance(double a, double b);
// Largest coordinate-wise angular distance.
double torus_distance(std::span<const double> a, std::span<const double> b);

// t ↦ (λⱼ t mod 2π)ⱼ, the natural map of ℝ into the Bohr torus.
TorusPoint natural_map(const FrequencyBasis& basis, double t);

// Real(t) ↦ f(t); Torus(θ) ↦ Σ c_k exp(i⟨k,θ⟩).
Complex evaluate_character(const SpectrumPoint& p, const AAPFunction& f);

// -- standard open sets of ℝ ⊔ 𝕋^d ------------------------------------------

struct OpenInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double t) const { return lo < t && t < hi; }
};

struct ClosedInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double t) const { return lo <= t && t <= hi; }
};

// Open arc {start + s : 0 < s < length}; length >= 2π means the whole circle.
struct Arc {
  double start = 0.0;
  double length = 0.0;
  bool full() const { return length >= kTwoPi; }
  bool contains(double theta) const;
};

struct Type1 {
  std::vector<OpenInterval> intervals;
};
struct Type2 {
  std::vector<ClosedInterval> compact;  // the removed compactum K
};
struct Type3 {
  std::vector<Arc> box;
};
using BasicOpen = std::variant<Type1, Type2, Type3>;

bool basic_open_contains(const BasicOpen& u, const SpectrumPoint& p,
                         const FrequencyBasis& basis);

// {t : λ₁ t mod 2π ∈ arc} for d = 1, as the translates
// (offset + n·period, offset + n·period + length), n ∈ ℤ.
struct PeriodicIntervals {
  double offset = 0.0;
  double length = 0.0;
  double period = 0.0;
  bool whole_line = false;

  bool empty() const { return !whole_line && length <= 0.0; }
  bool contains(double t) const;
  OpenInterval interval(std::int64_t n) const;
  // A nonempty family reaches past every bound in both directions, so it is
  // not contained in any compact subset of ℝ.
  bool unbounded() const { return !empty(); }
};

PeriodicIntervals type3_preimage_d1(const FrequencyBasis& basis, const Arc& arc);

}  // namespace twisted::aap
