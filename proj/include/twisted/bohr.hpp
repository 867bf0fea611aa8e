#pragma once

// Bohr means M_T(f) = (1/2T)∫_{-T}^{T} f dt and Fourier–Bohr coefficients
// c(μ) = lim M_T(f·e^{-iμt}), computed by composite midpoint quadrature.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "twisted/aap.hpp"
#include "twisted/quadrature.hpp"

namespace twisted::aap {

struct MeanEstimate {
  Complex value;
  // |value - M_T|: midpoint error plus a floating-point allowance.
  double quadrature_bound = std::numeric_limits<double>::infinity();
  // |M_T - limit|: known analytically for structured inputs only.
  double truncation_bound = std::numeric_limits<double>::infinity();
  double bound() const { return quadrature_bound + truncation_bound; }
};

// Generic integrand. With a Lipschitz constant L the quadrature bound is
// L·h/4; the truncation bound stays infinite.
MeanEstimate bohr_mean(const Integrand& f, double T, std::int64_t panels,
                       double lipschitz = std::numeric_limits<double>::infinity());
MeanEstimate fourier_bohr(const Integrand& f, double mu, double T, std::int64_t panels,
                          double lipschitz = std::numeric_limits<double>::infinity());

// Structured input: the bound covers |value - c(μ)| with
//   truncation  Σ_{⟨k,λ⟩≠μ} |c_k| / (T|⟨k,λ⟩ - μ|) + mass(a₀)/(2T)
//   quadrature  exact midpoint error of each exponential, tent kink terms.
// bohr_mean is fourier_bohr at μ = 0.
MeanEstimate bohr_mean(const AAPFunction& f, double T, std::int64_t panels);
MeanEstimate fourier_bohr(const AAPFunction& f, double mu, double T, std::int64_t panels);

struct DecomposeOptions {
  int support_bound = 1;     // K: estimate every |k|∞ <= K
  double T = 1000.0;
  double tolerance = 1e-3;   // estimates below this are zeroed
  std::int64_t panels = 0;   // 0: recommended_panels for the K-box
  double window_start = 10.0;
  double window_length = 10.0;
  int window_count = 6;      // windows start at window_start·2^j
  int samples_per_window = 200;
};

struct CoefficientEstimate {
  FrequencyIndex k;
  double frequency = 0.0;
  Complex estimate;
  double bound = std::numeric_limits<double>::infinity();
  std::optional<Complex> exact;  // structured inputs only
};

struct ResidualWindow {
  double start = 0.0;
  double max_abs = 0.0;  // max |f - f̂₁| over sampled points of the window
};

struct DecomposeReport {
  TrigPolynomial ap_estimate;
  std::vector<CoefficientEstimate> coefficients;
  std::vector<ResidualWindow> residuals;
  // Structured inputs: max_k |ĉ_k - c_k| and whether each error is within
  // its own analytic bound.
  std::optional<double> max_coefficient_error;
  std::optional<bool> within_bound;
};

DecomposeReport decompose(const Integrand& f, const FrequencyBasis& basis,
                          const DecomposeOptions& options);
DecomposeReport decompose(const AAPFunction& f, const DecomposeOptions& options);

}  // namespace twisted::aap
