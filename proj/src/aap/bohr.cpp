#include <algorithm>
#include <cmath>
#include <limits>

#include "twisted/bohr.hpp"
#include "twisted/error.hpp"

namespace twisted::aap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check(double T, std::int64_t panels) {
  require(std::isfinite(T) && T > 0.0, "T must be positive");
  require(panels >= 1, "panel count must be at least 1");
}

double target_tolerance(double mu) { return 1e-12 * std::max(1.0, std::abs(mu)); }

// Midpoint sum over [-T, T] of exp(iωt), divided by 2T, differs from the
// exact mean by (x/sin x - 1)·sin(ωT)/(ωT) with x = ωh/2.
double exponential_quadrature_error(double omega, double h, double T) {
  const double w = std::abs(omega);
  if (w == 0.0) return 0.0;
  const double x = w * h / 2.0;
  if (x >= std::numbers::pi / 2.0) return 2.0;
  const double excess = x < 1e-4 ? x * x / 6.0 : x / std::sin(x) - 1.0;
  return std::min(2.0, excess / (T * w));
}

struct Bounds {
  double truncation = 0.0;
  double quadrature = 0.0;
};

Bounds structured_bounds(const AAPFunction& f, double mu, double T, std::int64_t panels) {
  const double h = 2.0 * T / static_cast<double>(panels);
  Bounds b;
  double max_shift = std::abs(mu);
  for (const auto& [k, c] : f.ap.coefficients()) {
    const double shift = f.basis().frequency(k) - mu;
    const double a = std::abs(c);
    max_shift = std::max(max_shift, std::abs(shift));
    if (std::abs(shift) <= target_tolerance(mu))
      b.truncation += a * (shift * T) * (shift * T) / 6.0;  // 1 - sinc(shift·T)
    else
      b.truncation += a / (T * std::abs(shift));
    b.quadrature += a * exponential_quadrature_error(shift, h, T);
  }

  b.truncation += f.c0.mass() / (2.0 * T);
  for (const auto& e : f.c0.tents()) {
    const double a = std::abs(e.amplitude);
    const double slope = a / e.halfwidth;
    double err;
    if (mu == 0.0) {
      // Piecewise affine: only the (at most three) panels with a kink inside
      // are inexact, each by at most slope·h²/4.
      err = 3.0 * slope * h * h / 4.0;
    } else {
      const double m = std::abs(mu);
      const double lip = slope + m * a;
      const double second = a * (m * m + 2.0 * m / e.halfwidth);
      const double support_panels = 2.0 * e.halfwidth / h + 2.0;
      err = 3.0 * lip * h * h / 4.0 + support_panels * h * h * h * second / 24.0;
    }
    b.quadrature += err / (2.0 * T);
  }

  // Rounding: block-wise summation and phase arguments of size ~ωT.
  const double sup = f.c0.sup_norm() + f.ap.coefficient_l1();
  b.quadrature += sup * kEps * (4096.0 + 64.0 + 4.0 * max_shift * T);
  return b;
}

Complex mean_by_quadrature(const Integrand& g, double T, std::int64_t panels) {
  return midpoint_rule(g, -T, T, panels) / (2.0 * T);
}

}  // namespace

MeanEstimate bohr_mean(const Integrand& f, double T, std::int64_t panels, double lipschitz) {
  check(T, panels);
  MeanEstimate m;
  m.value = mean_by_quadrature(f, T, panels);
  const double h = 2.0 * T / static_cast<double>(panels);
  m.quadrature_bound = lipschitz * h / 4.0;
  return m;
}

MeanEstimate fourier_bohr(const Integrand& f, double mu, double T, std::int64_t panels,
                          double lipschitz) {
  return bohr_mean([&f, mu](double t) { return f(t) * std::polar(1.0, -mu * t); }, T,
                   panels, lipschitz);
}

MeanEstimate fourier_bohr(const AAPFunction& f, double mu, double T, std::int64_t panels) {
  check(T, panels);
  MeanEstimate m;
  m.value = mean_by_quadrature(
      [&f, mu](double t) { return f(t) * std::polar(1.0, -mu * t); }, T, panels);
  const Bounds b = structured_bounds(f, mu, T, panels);
  m.truncation_bound = b.truncation;
  m.quadrature_bound = b.quadrature;
  return m;
}

MeanEstimate bohr_mean(const AAPFunction& f, double T, std::int64_t panels) {
  return fourier_bohr(f, 0.0, T, panels);
}

DecomposeReport decompose(const Integrand& f, const FrequencyBasis& basis,
                          const DecomposeOptions& options) {
  require(options.support_bound >= 0, "support bound must be non-negative");
  require(options.tolerance > 0.0, "tolerance must be positive");
  require(options.window_count >= 0 && options.samples_per_window >= 2,
          "residual windows need at least two samples");

  const auto ks = index_box(basis.dimension(), options.support_bound);
  double max_frequency = 0.0;
  for (const auto& k : ks) max_frequency = std::max(max_frequency, std::abs(basis.frequency(k)));
  const std::int64_t panels = options.panels > 0
                                  ? options.panels
                                  : recommended_panels(options.T, 2.0 * max_frequency);

  DecomposeReport report{TrigPolynomial(basis), {}, {}, std::nullopt, std::nullopt};
  std::map<FrequencyIndex, Complex> kept;
  for (const auto& k : ks) {
    CoefficientEstimate c;
    c.k = k;
    c.frequency = basis.frequency(k);
    c.estimate = fourier_bohr(f, c.frequency, options.T, panels).value;
    if (std::abs(c.estimate) >= options.tolerance) kept.emplace(k, c.estimate);
    report.coefficients.push_back(std::move(c));
  }
  report.ap_estimate = TrigPolynomial(basis, std::move(kept));

  for (int j = 0; j < options.window_count; ++j) {
    ResidualWindow w;
    w.start = options.window_start * std::ldexp(1.0, j);
    for (int s = 0; s < options.samples_per_window; ++s) {
      const double t = w.start + options.window_length * s / (options.samples_per_window - 1);
      w.max_abs = std::max(w.max_abs, std::abs(f(t) - report.ap_estimate(t)));
    }
    report.residuals.push_back(w);
  }
  return report;
}

DecomposeReport decompose(const AAPFunction& f, const DecomposeOptions& options) {
  DecomposeReport report = decompose([&f](double t) { return f(t); }, f.basis(), options);

  double max_frequency = 0.0;
  for (const auto& c : report.coefficients)
    max_frequency = std::max(max_frequency, std::abs(c.frequency));
  const std::int64_t panels = options.panels > 0
                                  ? options.panels
                                  : recommended_panels(options.T, 2.0 * max_frequency);

  double worst = 0.0;
  bool within = true;
  for (auto& c : report.coefficients) {
    c.exact = f.ap.coefficient_at(c.frequency);
    const Bounds b = structured_bounds(f, c.frequency, options.T, panels);
    c.bound = b.truncation + b.quadrature;
    const double err = std::abs(c.estimate - *c.exact);
    worst = std::max(worst, err);
    within = within && err <= c.bound;
  }
  report.max_coefficient_error = worst;
  report.within_bound = within;
  return report;
}

}  // namespace twisted::aap
